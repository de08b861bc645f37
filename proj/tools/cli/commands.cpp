#include "commands.hpp"

#include "path_render.hpp"
#include "rank2/cluster.hpp"
#include "rank2/combinat.hpp"
#include "rank2/dyck.hpp"
#include "rank2/error.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace rank2::cli {

namespace {

enum class Format { Plain, Latex, Json, Csv };
enum class Engine { Formula, Oracle, Both };
enum class Picture { Ascii, Svg, Tikz };

struct Config {
    int r = 2;
    std::int64_t n = 4;
    Format format = Format::Plain;
    Engine engine = Engine::Formula;
    std::string out_path;
    int sum_cap = 10;
    int r_max = 0;
    std::string overlay;
    std::string sign = "positive";
    bool ascii = false;
    bool svg = false;
    bool tikz = false;
    bool dump_betas = false;
    Limits limits;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

RenderFormat render_format(Format f) {
    switch (f) {
        case Format::Latex: return RenderFormat::Latex;
        case Format::Json: return RenderFormat::Json;
        default: return RenderFormat::Plain;
    }
}

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw UsageError(message);
    }
}

int path_n(const Config& cfg) {
    require(cfg.n >= 4 && cfg.n <= 1'000'000, "--n must be >= 4 for this command");
    return static_cast<int>(cfg.n);
}

std::string cmd_expand(const Config& cfg, std::ostream& err, int& status) {
    require(cfg.format != Format::Csv, "expand supports --format plain, latex or json");
    const auto show = [&](const LaurentPoly2& p) { return render(p, render_format(cfg.format)); };
    switch (cfg.engine) {
        case Engine::Formula: return show(cluster_variable(cfg.r, cfg.n, cfg.limits).value);
        case Engine::Oracle: return show(oracle(cfg.r, cfg.n, cfg.limits));
        case Engine::Both: break;
    }
    const auto formula = cluster_variable(cfg.r, cfg.n, cfg.limits).value;
    const auto recursion = oracle(cfg.r, cfg.n, cfg.limits);
    if (formula == recursion) {
        return show(formula);
    }
    status = kMismatch;
    err << "engines disagree for r=" << cfg.r << " n=" << cfg.n << '\n';
    return "DIFF\nformula: " + show(formula) + "\noracle: " + show(recursion);
}

std::string cmd_fpoly(const Config& cfg) {
    if (cfg.format == Format::Csv) {
        const std::int64_t n = cfg.n >= 4 ? cfg.n : 3 - cfg.n;
        require(n >= 4, "--format csv needs an index with a path (n >= 4 or n <= -1)");
        require(cfg.r >= 2, "the path formula requires r >= 2");
        const auto path = build_path(cfg.r, static_cast<int>(n), cfg.limits);
        auto csv = histogram_csv(stats_histogram(path, cfg.limits));
        csv.pop_back();
        return csv;
    }
    return render(f_polynomial(cfg.r, cfg.n, cfg.limits), render_format(cfg.format), VariableNames::y());
}

std::string cmd_gvector(const Config& cfg) {
    const auto g = g_vector(cfg.r, cfg.n, cfg.limits);
    switch (cfg.format) {
        case Format::Json: return R"({"g1":)" + std::to_string(g.g1) + R"(,"g2":)" + std::to_string(g.g2) + "}";
        case Format::Latex: return "\\left(" + std::to_string(g.g1) + ", " + std::to_string(g.g2) + "\\right)";
        default: return "(" + std::to_string(g.g1) + ", " + std::to_string(g.g2) + ")";
    }
}

std::string cmd_euler(const Config& cfg) {
    require(cfg.format == Format::Plain || cfg.format == Format::Csv, "euler emits CSV only");
    require(cfg.sign == "positive" || cfg.sign == "negative", "--sign must be positive or negative");
    const auto sign = cfg.sign == "positive" ? EulerSign::Positive : EulerSign::Negative;
    auto csv = euler_csv(euler_table(cfg.r, path_n(cfg), sign, cfg.limits));
    csv.pop_back();
    return csv;
}

std::string cmd_verify(const Config& cfg, std::ostream& err, int& status) {
    const int r_max = cfg.r_max > 0 ? cfg.r_max : cfg.sum_cap - 4;
    const auto report = verify_range(r_max, cfg.sum_cap, cfg.limits);
    for (const auto& note : report.notes) {
        err << "note: " << note << '\n';
    }
    for (const auto& e : report.entries) {
        if (e.status == VerifyStatus::Fail) {
            err << "FAIL r=" << e.r << " n=" << e.n << ": " << e.detail << '\n';
        }
    }
    if (!report.ok()) {
        status = kMismatch;
    }
    auto text = report.to_jsonl();
    if (!text.empty()) {
        text.pop_back();
    }
    return text;
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return std::nullopt;
    }
    std::int64_t i = 0;
    std::int64_t k = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto a = std::from_chars(begin, begin + comma, i);
    const auto b = std::from_chars(begin + comma + 1, end, k);
    if (a.ec != std::errc{} || a.ptr != begin + comma || b.ec != std::errc{} || b.ptr != end) {
        return std::nullopt;
    }
    return std::pair{i, k};
}

std::string cmd_path(const Config& cfg, std::ostream& out_stream, bool to_stream) {
    require(cfg.r >= 2, "path needs r >= 2");
    const auto path = build_path(cfg.r, path_n(cfg), cfg.limits);
    if (cfg.dump_betas) {
        std::ostringstream lines;
        std::ostream& sink = to_stream ? out_stream : lines;
        enumerate_bruteforce(path, [&](const BetaSet& beta) { sink << beta_to_json(beta) << '\n'; }, cfg.limits);
        auto text = lines.str();
        if (!text.empty()) {
            text.pop_back();
        }
        return text;
    }
    std::optional<ColoredSubpath> overlay;
    if (!cfg.overlay.empty()) {
        const auto pair = parse_pair(cfg.overlay);
        require(pair.has_value(), "--overlay expects i,k");
        require(pair->first >= 0 && pair->first < pair->second && pair->second <= path.top(),
                "--overlay needs 0 <= i < k <= " + std::to_string(path.top()));
        overlay = classify(path, pair->first, pair->second);
    }
    if (cfg.format == Format::Json) {
        return path_to_json(path);
    }
    require(cfg.format == Format::Plain, "path supports --ascii, --svg, --tikz or --format json");
    require(int(cfg.ascii) + int(cfg.svg) + int(cfg.tikz) <= 1, "choose one of --ascii, --svg, --tikz");
    std::string text = cfg.svg ? path_svg(path, overlay) : cfg.tikz ? path_tikz(path, overlay) : path_ascii(path, overlay);
    text.pop_back();
    return text;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return kBadArguments;
        case ErrorKind::Overflow:
        case ErrorKind::CapExceeded:
        case ErrorKind::ConfigCap: return kCapBreach;
        default: return kInternal;
    }
}

std::optional<std::uint64_t> budget_from_env() {
    const char* value = std::getenv("CLUSTER_COMB_BUDGET");
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    std::uint64_t budget = 0;
    const std::string_view text(value);
    const auto res = std::from_chars(text.data(), text.data() + text.size(), budget);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || budget == 0) {
        throw UsageError("CLUSTER_COMB_BUDGET must be a positive integer");
    }
    return budget;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Rank-2 cluster variables from maximal Dyck paths", "rank2"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"latex", Format::Latex}, {"json", Format::Json}, {"csv", Format::Csv}};
    const std::map<std::string, Engine> engines{
        {"formula", Engine::Formula}, {"oracle", Engine::Oracle}, {"both", Engine::Both}};

    app.add_option("--r", cfg.r, "Exchange exponent r");
    app.add_option("--n", cfg.n, "Cluster variable index");
    app.add_option("--format", cfg.format, "plain, latex, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.add_option("--engine", cfg.engine, "formula, oracle or both")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    app.add_option("--sum-cap", cfg.sum_cap, "verify: largest r + n");
    app.add_option("--r-max", cfg.r_max, "verify: largest r (default sum-cap - 4)");
    app.add_option("--overlay", cfg.overlay, "path: highlight alpha(i,k), given as i,k");
    app.add_option("--max-exponent", cfg.limits.max_exponent, "Cap on exponents and c_n")
        ->check(CLI::PositiveNumber);
    app.add_option("--bruteforce-cap", cfg.limits.bruteforce_edge_cap, "Largest path length for brute force")
        ->check(CLI::PositiveNumber);
    auto* budget_opt = app.add_option("--config-budget", cfg.limits.config_budget,
                                      "Configurations visited before giving up (env CLUSTER_COMB_BUDGET)")
                           ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.limits.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "Laurent expansion of x_n");
    auto* fpoly = app.add_subcommand("fpoly", "F-polynomial of x_n");
    auto* gvector = app.add_subcommand("gvector", "g-vector of x_n");
    auto* euler = app.add_subcommand("euler", "Euler characteristics of quiver Grassmannians (CSV)");
    euler->add_option("--sign", cfg.sign, "positive for M(n), negative for M(3-n)");
    auto* verify = app.add_subcommand("verify", "Compare the formula with the recursion over a range");
    auto* path = app.add_subcommand("path", "Draw the maximal Dyck path D_n");
    path->add_flag("--ascii", cfg.ascii, "ASCII picture (default)");
    path->add_flag("--svg", cfg.svg, "SVG picture");
    path->add_flag("--tikz", cfg.tikz, "TikZ picture");
    path->add_flag("--dump-betas", cfg.dump_betas, "Stream every member of F(D_n) as JSON lines");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }

    int status = kOk;
    std::string text;
    const bool streaming = path->parsed() && cfg.dump_betas && cfg.out_path.empty();
    try {
        if (budget_opt->count() == 0) {
            if (const auto budget = budget_from_env()) {
                cfg.limits.config_budget = *budget;
            }
        }
        if (expand->parsed()) {
            text = cmd_expand(cfg, err, status);
        } else if (fpoly->parsed()) {
            text = cmd_fpoly(cfg);
        } else if (gvector->parsed()) {
            text = cmd_gvector(cfg);
        } else if (euler->parsed()) {
            text = cmd_euler(cfg);
        } else if (verify->parsed()) {
            text = cmd_verify(cfg, err, status);
        } else if (path->parsed()) {
            text = cmd_path(cfg, out, streaming);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }

    if (streaming) {
        return status;
    }
    if (cfg.out_path.empty()) {
        out << text << '\n';
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kBadArguments;
        }
        file << text << '\n';
    }
    return status;
}

}  // namespace rank2::cli
