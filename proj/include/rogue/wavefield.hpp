#ifndef ROGUE_WAVEFIELD_HPP
#define ROGUE_WAVEFIELD_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "rogue/spectral_scheme.hpp"

namespace rogue {

/// Inclusive sampling lo, lo + step, ..., hi with `count` samples.
struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    /// Parses "lo:hi:count".
    static GridAxis parse(const std::string& text);
    void validate() const;
    double at(int i) const;
    double step() const;
    std::string to_string() const;
};

/// Sampled v(x, t) on a tensor grid, stored t-outer (index it * nx + ix).
class WaveField {
public:
    WaveField(GridAxis x, GridAxis t);

    const GridAxis& x_axis() const { return x_; }
    const GridAxis& t_axis() const { return t_; }
    int nx() const { return x_.count; }
    int nt() const { return t_.count; }
    size_t size() const { return values_.size(); }

    void set(int ix, int it, std::complex<double> v);
    /// Allocates per-sample decimal text; call before filling in parallel.
    void enable_decimals();
    /// Same as set, also keeping decimal strings at the working precision.
    void set(int ix, int it, std::complex<double> v, std::string re, std::string im, std::string abs);
    /// Marks a failed sample; its modulus reads as NaN.
    void flag(int ix, int it, std::string reason);

    const std::complex<double>& value(int ix, int it) const { return values_[index(ix, it)]; }
    double modulus(int ix, int it) const { return modulus_[index(ix, it)]; }
    bool ok(int ix, int it) const { return errors_[index(ix, it)].empty(); }
    const std::string& error(int ix, int it) const { return errors_[index(ix, it)]; }
    bool has_decimals() const { return !re_text_.empty(); }
    /// Decimal text of the real/imaginary part (falls back to 17 significant digits).
    std::string re_text(int ix, int it) const;
    std::string im_text(int ix, int it) const;
    std::string abs_text(int ix, int it) const;
    int flagged_count() const;
    double max_modulus() const;

    // provenance
    int order = 0;
    DeformationParams params;
    double phase = 0.0;
    int precision = 53;
    /// Precision used for samples recomputed after a precision failure (0 = none).
    int fallback_precision = 0;
    int escalated = 0;
    std::string representation = "degenerate";

private:
    size_t index(int ix, int it) const;

    GridAxis x_;
    GridAxis t_;
    std::vector<std::complex<double>> values_;
    std::vector<double> modulus_;
    std::vector<std::string> errors_;
    std::vector<std::string> re_text_;
    std::vector<std::string> im_text_;
    std::vector<std::string> abs_text_;
};

struct Peak {
    double x = 0.0;
    double t = 0.0;
    double height = 0.0;
    int ix = 0;
    int it = 0;
};

enum class PatternClass { Triangular, Ring, Central, Unclassified };

std::string pattern_name(PatternClass c);

/// Result of classify_pattern, with the geometry it was judged on.
struct Classification {
    PatternClass tag = PatternClass::Unclassified;
    std::string detail;
    int ring_count = 0;
    bool has_center = false;
    double ring_radius = 0.0;
    double ring_spread = 0.0;
    double ring_spread_bound = 0.15;
};

struct PeakSet {
    std::vector<Peak> peaks;  // descending height
    double threshold = 0.5;
    Classification classification;
};

/// Strict 8-neighbour local maxima above 1 + threshold, refined by a
/// quadratic fit on the 3x3 neighbourhood. Exactly tied neighbours are
/// resolved in favour of the earlier sample (t-outer raster order).
PeakSet find_peaks(const WaveField& field, double threshold = 0.5);

/// Triangular / ring / central taxonomy for single-parameter deformations.
Classification classify_pattern(const PeakSet& peaks, const SolutionConfig& config);

nlohmann::json to_json(const PeakSet& peaks);

}  // namespace rogue

#endif  // ROGUE_WAVEFIELD_HPP
