#include "rogue/wavefield.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

#include "rogue/errors.hpp"

namespace rogue {

namespace {

double parse_double(const std::string& s, const std::string& whole) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw InputError("bad number '" + s + "' in grid axis '" + whole + "'");
    return v;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

GridAxis GridAxis::parse(const std::string& text) {
    auto a = text.find(':');
    auto b = a == std::string::npos ? a : text.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
        throw InputError("grid axis '" + text + "' must have the form lo:hi:count");
    }
    GridAxis g;
    g.lo = parse_double(text.substr(0, a), text);
    g.hi = parse_double(text.substr(a + 1, b - a - 1), text);
    std::string count = text.substr(b + 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
    if (ec != std::errc() || ptr != count.data() + count.size()) {
        throw InputError("bad sample count '" + count + "' in grid axis '" + text + "'");
    }
    g.count = n;
    g.validate();
    return g;
}

void GridAxis::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("grid extents must be finite");
    if (count < 1) throw InputError("grid sample count must be at least 1");
    if (count > 1 && !(hi > lo)) throw InputError("grid axis needs hi > lo when count > 1");
}

double GridAxis::at(int i) const {
    if (count == 1) return lo;
    if (i == count - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

double GridAxis::step() const { return count == 1 ? 0.0 : (hi - lo) / static_cast<double>(count - 1); }

std::string GridAxis::to_string() const { return fmt17(lo) + ":" + fmt17(hi) + ":" + std::to_string(count); }

WaveField::WaveField(GridAxis x, GridAxis t) : x_(x), t_(t) {
    x_.validate();
    t_.validate();
    size_t n = static_cast<size_t>(x_.count) * static_cast<size_t>(t_.count);
    values_.assign(n, {0.0, 0.0});
    modulus_.assign(n, 0.0);
    errors_.assign(n, {});
}

size_t WaveField::index(int ix, int it) const {
    if (ix < 0 || ix >= x_.count || it < 0 || it >= t_.count) throw IndexError("field sample index out of range");
    return static_cast<size_t>(it) * static_cast<size_t>(x_.count) + static_cast<size_t>(ix);
}

void WaveField::set(int ix, int it, std::complex<double> v) {
    size_t k = index(ix, it);
    values_[k] = v;
    modulus_[k] = std::abs(v);
    errors_[k].clear();
}

void WaveField::set(int ix, int it, std::complex<double> v, std::string re, std::string im, std::string abs) {
    // Allocation happens before parallel writers start touching distinct slots.
    if (re_text_.empty()) throw InputError("decimal storage not enabled for this field");
    size_t k = index(ix, it);
    set(ix, it, v);
    re_text_[k] = std::move(re);
    im_text_[k] = std::move(im);
    abs_text_[k] = std::move(abs);
}

void WaveField::enable_decimals() {
    re_text_.assign(values_.size(), {});
    im_text_.assign(values_.size(), {});
    abs_text_.assign(values_.size(), {});
}

void WaveField::flag(int ix, int it, std::string reason) {
    size_t k = index(ix, it);
    values_[k] = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    modulus_[k] = std::numeric_limits<double>::quiet_NaN();
    errors_[k] = reason.empty() ? std::string("evaluation failed") : std::move(reason);
}

std::string WaveField::re_text(int ix, int it) const {
    size_t k = index(ix, it);
    if (!re_text_.empty() && !re_text_[k].empty()) return re_text_[k];
    return fmt17(values_[k].real());
}

std::string WaveField::im_text(int ix, int it) const {
    size_t k = index(ix, it);
    if (!im_text_.empty() && !im_text_[k].empty()) return im_text_[k];
    return fmt17(values_[k].imag());
}

std::string WaveField::abs_text(int ix, int it) const {
    size_t k = index(ix, it);
    if (!abs_text_.empty() && !abs_text_[k].empty()) return abs_text_[k];
    return fmt17(modulus_[k]);
}

int WaveField::flagged_count() const {
    return static_cast<int>(std::count_if(errors_.begin(), errors_.end(), [](const std::string& s) { return !s.empty(); }));
}

double WaveField::max_modulus() const {
    double m = 0.0;
    for (double v : modulus_) {
        if (std::isfinite(v)) m = std::max(m, v);
    }
    return m;
}

std::string pattern_name(PatternClass c) {
    switch (c) {
        case PatternClass::Triangular: return "triangular";
        case PatternClass::Ring: return "ring";
        case PatternClass::Central: return "central";
        case PatternClass::Unclassified: return "unclassified";
    }
    return "unclassified";
}

PeakSet find_peaks(const WaveField& field, double threshold) {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) throw InputError("peak threshold must be positive");
    if (field.size() == 0) throw InputError("empty field");
    PeakSet out;
    out.threshold = threshold;
    const int nx = field.nx();
    const int nt = field.nt();
    const double hx = field.x_axis().step();
    const double ht = field.t_axis().step();
    for (int it = 1; it + 1 < nt; ++it) {
        for (int ix = 1; ix + 1 < nx; ++ix) {
            double f0 = field.modulus(ix, it);
            if (!std::isfinite(f0) || f0 <= 1.0 + threshold) continue;
            bool is_max = true;
            double f[3][3];
            for (int a = -1; a <= 1 && is_max; ++a) {
                for (int b = -1; b <= 1; ++b) {
                    double v = field.modulus(ix + a, it + b);
                    f[a + 1][b + 1] = v;
                    if (a == 0 && b == 0) continue;
                    // ties go to the first sample in raster order, so a flat top counts once
                    const bool later = b > 0 || (b == 0 && a > 0);
                    if (!std::isfinite(v) || !(later ? f0 >= v : f0 > v)) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (!is_max) continue;
            // least-squares quadratic on the 3x3 stencil (unit spacing)
            double gx = 0.0, gt = 0.0, hxx = 0.0, htt = 0.0;
            for (int w = 0; w < 3; ++w) {
                gx += (f[2][w] - f[0][w]) / 6.0;
                gt += (f[w][2] - f[w][0]) / 6.0;
                hxx += (f[2][w] - 2.0 * f[1][w] + f[0][w]) / 3.0;
                htt += (f[w][2] - 2.0 * f[w][1] + f[w][0]) / 3.0;
            }
            double hxt = (f[2][2] - f[2][0] - f[0][2] + f[0][0]) / 4.0;
            double det = hxx * htt - hxt * hxt;
            double dx = 0.0, dt = 0.0;
            if (hxx < 0.0 && det > 0.0) {
                dx = -(htt * gx - hxt * gt) / det;
                dt = -(hxx * gt - hxt * gx) / det;
                if (std::abs(dx) > 1.0 || std::abs(dt) > 1.0) dx = dt = 0.0;
            }
            Peak p;
            p.ix = ix;
            p.it = it;
            p.x = field.x_axis().at(ix) + dx * hx;
            p.t = field.t_axis().at(it) + dt * ht;
            p.height = f0 + 0.5 * (gx * dx + gt * dt);
            out.peaks.push_back(p);
        }
    }
    std::sort(out.peaks.begin(), out.peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.height != b.height) return a.height > b.height;
        if (a.it != b.it) return a.it < b.it;
        return a.ix < b.ix;
    });
    return out;
}

namespace {

struct Pt {
    double x;
    double y;
};

// The natural variable of these solutions is 2x + 4it, so geometry is judged
// in (x, 2t) where the patterns are isotropic.
std::vector<Pt> normalized(const std::vector<Peak>& peaks) {
    std::vector<Pt> pts;
    for (const auto& p : peaks) pts.push_back({p.x, 2.0 * p.t});
    return pts;
}

Pt centroid(const std::vector<Pt>& pts) {
    Pt c{0.0, 0.0};
    for (const auto& p : pts) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<double>(pts.size());
    c.y /= static_cast<double>(pts.size());
    return c;
}

double dist(const Pt& a, const Pt& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double seg_dist(const Pt& p, const Pt& a, const Pt& b) {
    double vx = b.x - a.x, vy = b.y - a.y;
    double len2 = vx * vx + vy * vy;
    double u = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    u = std::clamp(u, 0.0, 1.0);
    return std::hypot(p.x - (a.x + u * vx), p.y - (a.y + u * vy));
}

// Radius spread (max - min) / mean about the centroid.
double ring_spread(const std::vector<Pt>& pts, double* radius) {
    Pt c = centroid(pts);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
    for (const auto& p : pts) {
        double r = dist(p, c);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        sum += r;
    }
    double mean = sum / static_cast<double>(pts.size());
    if (radius) *radius = mean;
    return mean > 0.0 ? (hi - lo) / mean : std::numeric_limits<double>::infinity();
}

// N rows: the three extreme points span a triangle and each edge carries N
// peaks (corners included) within 15% of the edge length.
bool triangular_rows(const std::vector<Pt>& pts, int n, std::string* detail) {
    if (n < 2) return false;
    size_t m = pts.size();
    double best = -1.0;
    size_t ca = 0, cb = 0, cc = 0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            for (size_t k = j + 1; k < m; ++k) {
                double area = std::abs((pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                                       (pts[k].x - pts[i].x) * (pts[j].y - pts[i].y));
                if (area > best) {
                    best = area;
                    ca = i;
                    cb = j;
                    cc = k;
                }
            }
        }
    }
    if (best <= 0.0) return false;
    const Pt corners[3] = {pts[ca], pts[cb], pts[cc]};
    std::ostringstream os;
    os << "edge counts";
    bool ok = true;
    for (int e = 0; e < 3; ++e) {
        const Pt& a = corners[e];
        const Pt& b = corners[(e + 1) % 3];
        double tol = 0.15 * dist(a, b);
        int on_edge = 0;
        for (const auto& p : pts) {
            if (seg_dist(p, a, b) <= tol) ++on_edge;
        }
        os << ' ' << on_edge;
        if (on_edge != n) ok = false;
    }
    if (detail) *detail = os.str();
    return ok;
}

}  // namespace

Classification classify_pattern(const PeakSet& peaks, const SolutionConfig& config) {
    Classification c;
    const int n = config.order;
    const auto count = static_cast<int>(peaks.peaks.size());
    auto pts = normalized(peaks.peaks);

    if (config.params.all_zero()) {
        if (count == 1) {
            c.tag = PatternClass::Central;
            c.detail = "single peak at zero parameters";
        } else {
            c.detail = std::to_string(count) + " peaks at zero parameters";
        }
        return c;
    }

    // ring of 2N-1, optionally with one central peak
    if (n >= 2 && (count == 2 * n - 1 || count == 2 * n)) {
        std::vector<Pt> ring = pts;
        bool center = false;
        if (count == 2 * n) {
            Pt cen = centroid(pts);
            auto it = std::min_element(ring.begin(), ring.end(),
                                       [&](const Pt& a, const Pt& b) { return dist(a, cen) < dist(b, cen); });
            ring.erase(it);
            center = true;
        }
        double radius = 0.0;
        double spread = ring_spread(ring, &radius);
        if (spread < c.ring_spread_bound) {
            c.tag = PatternClass::Ring;
            c.ring_count = static_cast<int>(ring.size());
            c.has_center = center;
            c.ring_radius = radius;
            c.ring_spread = spread;
            c.detail = std::to_string(c.ring_count) + " peaks on a ring" + (center ? " around a central peak" : "");
            return c;
        }
    }

    if (count == n * (n + 1) / 2) {
        std::string detail;
        if (triangular_rows(pts, n, &detail)) {
            c.tag = PatternClass::Triangular;
            c.detail = std::to_string(count) + " peaks in " + std::to_string(n) + " rows (" + detail + ")";
            return c;
        }
        c.detail = "triangular count without row structure (" + detail + ")";
        return c;
    }

    c.detail = std::to_string(count) + " peaks match no configuration";
    return c;
}

nlohmann::json to_json(const PeakSet& peaks) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["threshold"] = peaks.threshold;
    j["count"] = peaks.peaks.size();
    auto arr = nlohmann::json::array();
    for (const auto& p : peaks.peaks) {
        arr.push_back({{"x", p.x}, {"t", p.t}, {"abs_v", p.height}, {"ix", p.ix}, {"it", p.it}});
    }
    j["peaks"] = arr;
    const auto& c = peaks.classification;
    j["classification"] = {{"tag", pattern_name(c.tag)},
                           {"detail", c.detail},
                           {"ring_count", c.ring_count},
                           {"has_center", c.has_center},
                           {"ring_radius", c.ring_radius},
                           {"ring_spread", c.ring_spread},
                           {"ring_spread_bound", c.ring_spread_bound}};
    return j;
}

}  // namespace rogue
