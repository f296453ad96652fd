#include "rogue/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rogue/degenerate.hpp"
#include "rogue/errors.hpp"
#include "rogue/suites.hpp"

#ifndef ROGUE_VERSION
#define ROGUE_VERSION "0.0.0"
#endif

namespace rogue::cli {

namespace fs = std::filesystem;

namespace {

/// Bad flags or unreadable input, reported with exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

double parse_number(const std::string& text, const std::string& what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (text.empty() || end != begin + text.size()) throw UsageError("cannot read '" + text + "' as " + what);
    return v;
}

int parse_int(const std::string& text, const std::string& what) {
    double v = parse_number(text, what);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw UsageError("'" + text + "' is not an integer " + what);
    return static_cast<int>(v);
}

std::string fmt17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

std::vector<int> parse_order_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item, "order"));
        } else {
            int lo = parse_int(item.substr(0, dots), "order");
            int hi = parse_int(item.substr(dots + 2), "order");
            if (hi < lo) throw UsageError("empty order range '" + item + "'");
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        }
    }
    if (out.empty()) throw UsageError("no orders in '" + text + "'");
    for (int n : out) {
        if (n < 1 || n > 10) throw UsageError("order " + std::to_string(n) + " outside 1..10");
    }
    return out;
}

std::pair<int, double> parse_indexed_value(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + text + "' must look like k=value");
    return {parse_int(text.substr(0, eq), "parameter index"), parse_number(text.substr(eq + 1), "parameter value")};
}

nlohmann::json config_json(const SolutionConfig& c) {
    return {{"order", c.order},
            {"a_tilde", c.params.a_tilde},
            {"b_tilde", c.params.b_tilde},
            {"phase", c.phase},
            {"precision", c.effective_precision()},
            {"representation", c.representation == Representation::Oracle ? "oracle" : "degenerate"},
            {"oracle_eps", c.oracle_eps}};
}

SolutionConfig config_from_json(const nlohmann::json& j) {
    try {
        SolutionConfig c = SolutionConfig::peregrine(j.at("order").get<int>());
        c.params.a_tilde = j.at("a_tilde").get<std::vector<double>>();
        c.params.b_tilde = j.at("b_tilde").get<std::vector<double>>();
        c.phase = j.value("phase", 0.0);
        c.precision = j.value("precision", 0);
        std::string rep = j.value("representation", std::string("degenerate"));
        if (rep != "degenerate" && rep != "oracle") throw UsageError("unknown representation '" + rep + "'");
        c.representation = rep == "oracle" ? Representation::Oracle : Representation::Degenerate;
        if (j.contains("oracle_eps")) c.oracle_eps = j.at("oracle_eps").get<std::vector<double>>();
        c.validate();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed configuration: ") + e.what());
    }
}

void write_field_csv(const WaveField& f, std::ostream& os) {
    os << "x,t,re_v,im_v,abs_v\n";
    for (int it = 0; it < f.nt(); ++it) {
        for (int ix = 0; ix < f.nx(); ++ix) {
            os << fmt17(f.x_axis().at(ix)) << ',' << fmt17(f.t_axis().at(it)) << ',';
            if (f.ok(ix, it)) {
                os << f.re_text(ix, it) << ',' << f.im_text(ix, it) << ',' << f.abs_text(ix, it) << '\n';
            } else {
                os << "nan,nan,nan\n";
            }
        }
    }
}

namespace {

struct CsvRow {
    double v[5];
};

[[noreturn]] void csv_fail(int line, int column, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

GridAxis infer_axis(double lo, double hi, int count, int line) {
    GridAxis a{lo, hi, count};
    try {
        a.validate();
    } catch (const InputError& e) {
        csv_fail(line, 1, std::string("inconsistent grid: ") + e.what());
    }
    return a;
}

bool near(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * std::max(1.0, scale); }

}  // namespace

WaveField read_field_csv(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!std::getline(is, line)) throw InputError("line 1, column 1: empty field file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,t,re_v,im_v,abs_v") csv_fail(1, 1, "expected header x,t,re_v,im_v,abs_v");
    std::vector<CsvRow> rows;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        CsvRow r{};
        size_t pos = 0;
        for (int c = 0; c < 5; ++c) {
            size_t comma = line.find(',', pos);
            if ((c < 4) != (comma != std::string::npos)) {
                csv_fail(lineno, static_cast<int>(pos) + 1, c < 4 ? "expected 5 fields" : "too many fields");
            }
            std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const char* b = cell.c_str();
            char* e = nullptr;
            r.v[c] = std::strtod(b, &e);
            if (cell.empty() || e != b + cell.size()) {
                csv_fail(lineno, static_cast<int>(pos) + 1, "not a number: '" + cell + "'");
            }
            if (c < 2 && !std::isfinite(r.v[c])) csv_fail(lineno, static_cast<int>(pos) + 1, "non-finite coordinate");
            pos = comma + 1;
        }
        rows.push_back(r);
    }
    if (rows.empty()) throw InputError("line " + std::to_string(lineno) + ", column 1: field has no samples");
    int nx = 1;
    while (nx < static_cast<int>(rows.size()) && rows[static_cast<size_t>(nx)].v[1] == rows[0].v[1]) ++nx;
    if (rows.size() % static_cast<size_t>(nx) != 0) {
        csv_fail(lineno, 1, "sample count is not a multiple of the row length " + std::to_string(nx));
    }
    int nt = static_cast<int>(rows.size()) / nx;
    GridAxis xa = infer_axis(rows[0].v[0], rows[static_cast<size_t>(nx - 1)].v[0], nx, 2);
    GridAxis ta = infer_axis(rows[0].v[1], rows.back().v[1], nt, 2);
    double xs = std::max(std::abs(xa.lo), std::abs(xa.hi));
    double ts = std::max(std::abs(ta.lo), std::abs(ta.hi));
    WaveField f(xa, ta);
    for (int it = 0; it < nt; ++it) {
        for (int ix = 0; ix < nx; ++ix) {
            const CsvRow& r = rows[static_cast<size_t>(it * nx + ix)];
            int ln = 2 + it * nx + ix;
            if (!near(r.v[0], xa.at(ix), xs)) csv_fail(ln, 1, "x off the uniform grid");
            if (!near(r.v[1], ta.at(it), ts)) csv_fail(ln, 1, "t off the uniform grid (rows must be t-outer)");
            if (std::isfinite(r.v[2]) && std::isfinite(r.v[3])) {
                f.set(ix, it, {r.v[2], r.v[3]});
            } else {
                f.flag(ix, it, "flagged in input");
            }
        }
    }
    return f;
}

void write_pgm(const WaveField& f, double scale, std::ostream& os) {
    if (!(scale > 0.0)) throw InputError("graymap scale must be positive");
    os << "P5\n" << f.nx() << ' ' << f.nt() << "\n65535\n";
    for (int it = f.nt() - 1; it >= 0; --it) {
        for (int ix = 0; ix < f.nx(); ++ix) {
            double m = f.modulus(ix, it);
            double u = std::isfinite(m) ? std::clamp(m / scale, 0.0, 1.0) : 0.0;
            auto g = static_cast<std::uint16_t>(std::lround(u * 65535.0));
            os.put(static_cast<char>(g >> 8));
            os.put(static_cast<char>(g & 0xff));
        }
    }
}

namespace {

struct FieldArgs {
    int order = 1;
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::string x = "-3:3:121";
    std::string t = "-3:3:121";
    std::string out = "field";
    int precision = 0;
    int fallback = 0;
    unsigned threads = 0;
    double phase = 0.0;
    std::string representation = "degenerate";
    bool no_pgm = false;
};

void add_field_options(CLI::App* cmd, FieldArgs& fa, bool deform) {
    cmd->add_option("--order,-n", fa.order, "Solution order N (1..10)")->required()->check(CLI::Range(1, 10));
    if (deform) {
        cmd->add_option("--a", fa.a, "Deformation a_k as k=value, k in 1..N-1 (repeatable)");
        cmd->add_option("--b", fa.b, "Deformation b_k as k=value, k in 1..N-1 (repeatable)");
    }
    cmd->add_option("--x", fa.x, "x sampling lo:hi:count (inclusive)")->capture_default_str();
    cmd->add_option("--t", fa.t, "t sampling lo:hi:count (inclusive)")->capture_default_str();
    cmd->add_option("--out,-o", fa.out, "Output prefix for .csv, .pgm and .json")->capture_default_str();
    cmd->add_option("--precision,-p", fa.precision, "Mantissa bits; 0 picks 53 for N<=2 and 256 above")
        ->capture_default_str();
    cmd->add_option("--fallback-precision", fa.fallback,
                    "Recompute samples that exhaust precision at this many bits (0 disables)")
        ->capture_default_str();
    cmd->add_option("--threads,-j", fa.threads, "Worker threads; 0 uses all cores")->capture_default_str();
    cmd->add_option("--phase", fa.phase, "Constant phase factor exp(i*phase)")->capture_default_str();
    cmd->add_option("--representation", fa.representation, "degenerate or oracle")
        ->check(CLI::IsMember({"degenerate", "oracle"}))
        ->capture_default_str();
    cmd->add_flag("--no-pgm", fa.no_pgm, "Skip the graymap");
}

SolutionConfig config_from_args(const FieldArgs& fa) {
    SolutionConfig c = SolutionConfig::peregrine(fa.order);
    auto apply = [&](const std::vector<std::string>& items, std::vector<double>& dst, const char* name) {
        for (const auto& item : items) {
            auto [k, v] = parse_indexed_value(item);
            if (k < 1 || k > fa.order - 1) {
                std::string valid = fa.order == 1 ? std::string("none (order 1 has no parameters)")
                                                  : "1.." + std::to_string(fa.order - 1);
                throw UsageError(std::string("--") + name + " index " + std::to_string(k) +
                                 " out of range; valid indices: " + valid);
            }
            dst[static_cast<size_t>(k - 1)] = v;
        }
    };
    apply(fa.a, c.params.a_tilde, "a");
    apply(fa.b, c.params.b_tilde, "b");
    c.phase = fa.phase;
    c.precision = fa.precision;
    c.representation = fa.representation == "oracle" ? Representation::Oracle : Representation::Degenerate;
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return c;
}

GridAxis axis_arg(const std::string& text) {
    try {
        return GridAxis::parse(text);
    } catch (const InputError& e) {
        throw UsageError(e.what());
    }
}

void write_json_file(const fs::path& path, const nlohmann::json& j) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path.string());
    os << j.dump(2) << '\n';
}

int generate_field(const std::string& command, const SolutionConfig& config, const GridAxis& x, const GridAxis& t,
                   const FieldArgs& fa, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    GridOptions g;
    g.keep_decimals = true;
    g.threads = fa.threads;
    g.fallback_precision = fa.fallback;
    WaveField f = evaluate_grid(config, x, t, g);

    fs::path prefix(fa.out);
    if (prefix.has_parent_path()) fs::create_directories(prefix.parent_path());
    fs::path csv = prefix;
    csv += ".csv";
    fs::path pgm = prefix;
    pgm += ".pgm";
    fs::path manifest = prefix;
    manifest += ".json";
    {
        std::ofstream os(csv);
        if (!os) throw Error("cannot write " + csv.string());
        write_field_csv(f, os);
    }
    std::vector<std::string> artifacts{csv.filename().string()};
    if (!fa.no_pgm) {
        std::ofstream os(pgm, std::ios::binary);
        if (!os) throw Error("cannot write " + pgm.string());
        write_pgm(f, 2.0 * config.order + 1.0, os);
        artifacts.push_back(pgm.filename().string());
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    nlohmann::json m;
    m["schema_version"] = 1;
    m["tool"] = "rogue";
    m["tool_version"] = ROGUE_VERSION;
    m["command"] = command;
    m["config"] = config_json(config);
    m["grid"] = {{"x", x.to_string()}, {"t", t.to_string()}};
    m["fallback_precision"] = fa.fallback;
    m["threads"] = fa.threads;
    m["graymap"] = !fa.no_pgm;
    m["artifacts"] = artifacts;
    m["samples"] = f.size();
    m["flagged"] = f.flagged_count();
    m["escalated"] = f.escalated;
    m["max_abs_v"] = f.max_modulus();
    m["wall_clock_s"] = wall;
    write_json_file(manifest, m);

    out << "wrote " << csv.string() << (fa.no_pgm ? "" : ", " + pgm.string()) << ", " << manifest.string() << " ("
        << f.size() << " samples, max |v| " << fmt17(f.max_modulus()) << ")\n";
    if (f.flagged_count() > 0) {
        int bits = std::max(config.effective_precision(), fa.fallback);
        err << "advisory: " << f.flagged_count() << " samples exhausted " << bits
            << "-bit precision and are written as nan; rerun with --fallback-precision " << 2 * bits << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string orders;
    int precision = 256;
    std::uint64_t seed = 20240601;
    int grid = 41;
    int points = 10;
    int samples = 50;
    std::string report = "verify_report.json";
};

int run_verify(const VerifyArgs& va, std::ostream& out) {
    SuiteOptions o;
    if (!va.orders.empty()) o.orders = parse_order_list(va.orders);
    o.precision = va.precision;
    o.seed = va.seed;
    o.grid = va.grid;
    o.points = va.points;
    o.samples = va.samples;
    auto records = run_suite(va.suite, o);
    nlohmann::json rep = report_json(records);
    rep["suite"] = va.suite;
    rep["seed"] = va.seed;
    rep["precision"] = va.precision;
    rep["tool_version"] = ROGUE_VERSION;
    if (va.report == "-") {
        out << rep.dump(2) << '\n';
    } else {
        write_json_file(va.report, rep);
    }
    bool all = true;
    for (const auto& r : rep["checks"]) {
        bool pass = r["status"] == "pass";
        all = all && pass;
        if (va.report != "-") {
            out << (pass ? "PASS " : "FAIL ") << r["name"].get<std::string>() << "  worst "
                << r["worst_error"].dump() << "  tolerance " << r["tolerance"].dump() << "  ("
                << std::setprecision(3) << r["runtime_s"].get<double>() << " s)\n";
        }
    }
    if (va.report != "-") out << "report written to " << va.report << '\n';
    return all ? kExitOk : kExitFailure;
}

struct PeaksArgs {
    std::string input;
    std::string manifest;
    int order = 0;
    std::vector<std::string> a;
    std::vector<std::string> b;
    double threshold = 0.5;
    std::string out = "-";
};

int run_peaks(const PeaksArgs& pa, std::ostream& out) {
    std::ifstream is(pa.input);
    if (!is) throw UsageError("cannot open " + pa.input);
    WaveField f = [&] {
        try {
            return read_field_csv(is);
        } catch (const InputError& e) {
            throw UsageError(pa.input + ": " + e.what());
        }
    }();
    std::optional<SolutionConfig> config;
    if (pa.order > 0) {
        FieldArgs fa;
        fa.order = pa.order;
        fa.a = pa.a;
        fa.b = pa.b;
        config = config_from_args(fa);
    } else {
        fs::path mpath = pa.manifest.empty() ? fs::path(pa.input).replace_extension(".json") : fs::path(pa.manifest);
        if (!pa.manifest.empty() || fs::exists(mpath)) {
            std::ifstream ms(mpath);
            if (!ms) throw UsageError("cannot open manifest " + mpath.string());
            nlohmann::json mj;
            try {
                mj = nlohmann::json::parse(ms);
            } catch (const nlohmann::json::parse_error& e) {
                throw UsageError(mpath.string() + ": " + e.what());
            }
            config = config_from_json(mj.at("config"));
        }
    }
    if (!(pa.threshold > 0.0)) throw UsageError("threshold must be positive");
    PeakSet ps = find_peaks(f, pa.threshold);
    nlohmann::json j;
    if (config) {
        ps.classification = classify_pattern(ps, *config);
        j = to_json(ps);
        j["config"] = config_json(*config);
    } else {
        ps.classification.detail = "no configuration supplied; pass --order or a manifest to classify";
        j = to_json(ps);
    }
    j["grid"] = {{"x", f.x_axis().to_string()}, {"t", f.t_axis().to_string()}};
    if (pa.out == "-") {
        out << j.dump(2) << '\n';
    } else {
        write_json_file(pa.out, j);
        out << ps.peaks.size() << " peaks (" << pattern_name(ps.classification.tag) << ") written to " << pa.out << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Higher-order rogue-wave solutions of the focusing NLS equation", "rogue"};
    app.set_version_flag("--version", ROGUE_VERSION);
    app.require_subcommand(1);

    FieldArgs pere;
    auto* c_pere = app.add_subcommand("peregrine", "Zero-parameter solution of order N on a grid");
    add_field_options(c_pere, pere, false);

    FieldArgs def;
    auto* c_def = app.add_subcommand("deform", "Deformed solution with parameters a_k, b_k on a grid");
    add_field_options(c_def, def, true);

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "Run verification suites and write a JSON report");
    c_ver->add_option("--suite,-s", ver.suite, "Suite name")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    c_ver->add_option("--order,-n", ver.orders, "Orders, e.g. 2, 1..4 or 1,3 (default: per suite)");
    c_ver->add_option("--precision,-p", ver.precision, "Mantissa bits for the checks")
        ->check(CLI::Range(53, 100000))
        ->capture_default_str();
    c_ver->add_option("--seed", ver.seed, "Seed for random points and parameters")->capture_default_str();
    c_ver->add_option("--grid", ver.grid, "Samples per axis on [-2,2] for residual and symmetry")
        ->check(CLI::Range(3, 1001))
        ->capture_default_str();
    c_ver->add_option("--points", ver.points, "Random points for the oracle suite")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    c_ver->add_option("--samples", ver.samples, "Random points for the zeros suite")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    c_ver->add_option("--report,-r", ver.report, "Report path, or - for JSON on stdout")->capture_default_str();

    PeaksArgs pk;
    auto* c_pk = app.add_subcommand("peaks", "Find and classify peaks of a field CSV");
    c_pk->add_option("--input,-i", pk.input, "Field CSV")->required();
    c_pk->add_option("--manifest,-m", pk.manifest, "Manifest with the configuration (default: sibling .json)");
    c_pk->add_option("--order,-n", pk.order, "Order, overriding the manifest")->check(CLI::Range(1, 10));
    c_pk->add_option("--a", pk.a, "Deformation a_k as k=value (with --order)");
    c_pk->add_option("--b", pk.b, "Deformation b_k as k=value (with --order)");
    c_pk->add_option("--threshold", pk.threshold, "Height above the unit background")->capture_default_str();
    c_pk->add_option("--out,-o", pk.out, "Output path, or - for stdout")->capture_default_str();

    std::string replay_manifest;
    std::string replay_out;
    auto* c_rep = app.add_subcommand("replay", "Re-run a field command from its manifest");
    c_rep->add_option("--manifest,-m", replay_manifest, "Manifest written by peregrine or deform")->required();
    c_rep->add_option("--out,-o", replay_out, "Output prefix (default: next to the manifest)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << ROGUE_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << "run '" << "rogue " << (sub == &app ? "" : sub->get_name() + " ") << "--help' for usage\n";
        return kExitUsage;
    }

    try {
        if (c_pere->parsed()) {
            SolutionConfig c = config_from_args(pere);
            return generate_field("peregrine", c, axis_arg(pere.x), axis_arg(pere.t), pere, out, err);
        }
        if (c_def->parsed()) {
            SolutionConfig c = config_from_args(def);
            return generate_field("deform", c, axis_arg(def.x), axis_arg(def.t), def, out, err);
        }
        if (c_ver->parsed()) return run_verify(ver, out);
        if (c_pk->parsed()) return run_peaks(pk, out);
        if (c_rep->parsed()) {
            std::ifstream ms(replay_manifest);
            if (!ms) throw UsageError("cannot open " + replay_manifest);
            nlohmann::json m;
            try {
                m = nlohmann::json::parse(ms);
            } catch (const nlohmann::json::parse_error& e) {
                throw UsageError(replay_manifest + ": " + e.what());
            }
            if (m.value("schema_version", 0) != 1) throw UsageError("unsupported manifest schema_version");
            SolutionConfig c = config_from_json(m.at("config"));
            FieldArgs fa;
            fa.order = c.order;
            fa.precision = c.precision;
            fa.fallback = m.value("fallback_precision", 0);
            fa.threads = m.value("threads", 0u);
            fa.no_pgm = !m.value("graymap", true);
            if (replay_out.empty()) {
                fs::path p(replay_manifest);
                fa.out = (p.parent_path() / p.stem()).string();
            } else {
                fa.out = replay_out;
            }
            std::string cmd = m.value("command", std::string("peregrine"));
            return generate_field(cmd, c, axis_arg(m.at("grid").at("x").get<std::string>()),
                                  axis_arg(m.at("grid").at("t").get<std::string>()), fa, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed manifest: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace rogue::cli
