#ifndef ROGUE_CLI_HPP
#define ROGUE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rogue/spectral_scheme.hpp"
#include "rogue/wavefield.hpp"

namespace rogue::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Field CSV: header x,t,re_v,im_v,abs_v, one sample per row, t-outer.
void write_field_csv(const WaveField& field, std::ostream& os);
/// Parses a field CSV; throws InputError with line and column on malformed input.
WaveField read_field_csv(std::istream& is);

/// 16-bit binary graymap of |v| mapped linearly from [0, scale]; largest t on top.
void write_pgm(const WaveField& field, double scale, std::ostream& os);

/// "1..4", "3" or "1,2,5".
std::vector<int> parse_order_list(const std::string& text);
/// "k=v" with k one-based.
std::pair<int, double> parse_indexed_value(const std::string& text);

nlohmann::json config_json(const SolutionConfig& config);
SolutionConfig config_from_json(const nlohmann::json& j);

}  // namespace rogue::cli

#endif  // ROGUE_CLI_HPP
