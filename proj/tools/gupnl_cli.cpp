// Command-line front end: roots, scan, entangle, sample, uncertainty, limit.
// Structured output in json, csv, or text; every run is deterministic given
// its full flag set. Exit codes: 0 ok, 64 usage, 65 domain, 66 numeric.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gupnl/batch.hpp"
#include "gupnl/entanglement.hpp"
#include "gupnl/errors.hpp"
#include "gupnl/measurement.hpp"
#include "gupnl/representations.hpp"
#include "gupnl/roots.hpp"
#include "gupnl/uncertainty.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double beta = 1.0;
    double hbar = 1.0;
    std::uint64_t seed = 0;
    std::string format = "text";
    int precision = 12;
    std::string out_path;
};

std::string fmt(double v, int precision) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

// Round to the configured number of significant digits before handing a value
// to the JSON writer, so emitted documents re-serialize to identical bytes.
double round_sig(double v, int precision) {
    return std::strtod(fmt(v, precision).c_str(), nullptr);
}

ordered_json jcomplex(std::complex<double> z, int precision) {
    return ordered_json{{"re", round_sig(z.real(), precision)},
                        {"im", round_sig(z.imag(), precision)}};
}

std::string fmt_complex(std::complex<double> z, int precision) {
    const std::string im = fmt(std::abs(z.imag()), precision);
    return fmt(z.real(), precision) + (z.imag() < 0.0 ? " - " : " + ") + im + "i";
}

// Coefficient syntax: "re" or "re:im".
std::complex<double> parse_complex(const std::string& tok) {
    const auto parse_part = [&](const std::string& part) {
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size())
            throw usage_error("cannot parse coefficient '" + tok + "' (expected re or re:im)");
        return v;
    };
    const auto pos = tok.find(':');
    if (pos == std::string::npos) return {parse_part(tok), 0.0};
    return {parse_part(tok.substr(0, pos)), parse_part(tok.substr(pos + 1))};
}

gupnl::CoefficientVector parse_coeffs(const std::vector<std::string>& toks) {
    gupnl::CoefficientVector v;
    for (int i = 0; i < 3; ++i) v.values[i] = parse_complex(toks[i]);
    return v;
}

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw usage_error("cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

// ---- roots ----------------------------------------------------------------

struct VietaResiduals {
    double sum_abs;
    double pairwise_rel;
    double product_rel;
    double forward_max;
};

VietaResiduals vieta_residuals(const gupnl::RootTriple& t, const gupnl::GupParams& params) {
    const auto roots = gupnl::roots_array(t);
    const double beta = params.beta;
    const double P = t.source_p;
    const std::complex<double> prod = roots[0] * roots[1] * roots[2];
    const std::complex<double> pair =
        roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2];
    double fwd = 0.0;
    for (const auto& r : roots)
        fwd = std::max(fwd, std::abs(gupnl::forward_map(r, params) - P));
    return VietaResiduals{
        gupnl::root_sum_identity(t),
        std::abs(pair - 1.0 / beta) * beta,
        std::abs(prod - P / beta) / std::max(1.0, std::abs(P / beta)),
        fwd,
    };
}

void cmd_roots(double P, const RunConfig& cfg) {
    const gupnl::GupParams params(cfg.beta, cfg.hbar);
    const auto closed = gupnl::cardano_roots(P, params);
    const auto orac = gupnl::oracle_roots(P, params);
    const auto ca = gupnl::roots_array(closed);
    const auto oa = gupnl::roots_array(orac);

    std::array<double, 3> diffs;
    double max_diff = 0.0;
    for (int i = 0; i < 3; ++i) {
        diffs[i] = std::abs(ca[i] - oa[i]);
        max_diff = std::max(max_diff, diffs[i]);
    }
    const auto vr = vieta_residuals(closed, params);
    const int p = cfg.precision;
    Sink sink(cfg.out_path);

    if (cfg.format == "json") {
        ordered_json j;
        j["P"] = round_sig(P, p);
        j["beta"] = round_sig(cfg.beta, p);
        j["hbar"] = round_sig(cfg.hbar, p);
        j["method"] = gupnl::to_string(closed.method);
        j["roots"] = ordered_json::array();
        for (const auto& r : ca) j["roots"].push_back(jcomplex(r, p));
        j["oracle_roots"] = ordered_json::array();
        for (const auto& r : oa) j["oracle_roots"].push_back(jcomplex(r, p));
        j["solver_diff"] = {round_sig(diffs[0], p), round_sig(diffs[1], p),
                            round_sig(diffs[2], p)};
        j["solver_diff_max"] = round_sig(max_diff, p);
        j["vieta"] = ordered_json{{"sum_abs", round_sig(vr.sum_abs, p)},
                                  {"pairwise_rel", round_sig(vr.pairwise_rel, p)},
                                  {"product_rel", round_sig(vr.product_rel, p)}};
        j["forward_residual_max"] = round_sig(vr.forward_max, p);
        sink.out() << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        sink.out() << "P,root1_re,root1_im,root2_re,root2_im,root3_re,root3_im,"
                      "method,solver_diff_max,vieta_sum_abs,vieta_pairwise_rel,"
                      "vieta_product_rel,forward_residual_max\n";
        sink.out() << fmt(P, p);
        for (const auto& r : ca)
            sink.out() << "," << fmt(r.real(), p) << "," << fmt(r.imag(), p);
        sink.out() << "," << gupnl::to_string(closed.method) << "," << fmt(max_diff, p)
                   << "," << fmt(vr.sum_abs, p) << "," << fmt(vr.pairwise_rel, p) << ","
                   << fmt(vr.product_rel, p) << "," << fmt(vr.forward_max, p) << "\n";
    } else {
        auto& os = sink.out();
        os << "P = " << fmt(P, p) << "\n";
        os << "beta = " << fmt(cfg.beta, p) << "\n";
        os << "method = " << gupnl::to_string(closed.method) << "\n";
        for (int i = 0; i < 3; ++i)
            os << "root" << i + 1 << " = " << fmt_complex(ca[i], p) << "\n";
        for (int i = 0; i < 3; ++i)
            os << "oracle root" << i + 1 << " = " << fmt_complex(oa[i], p) << "\n";
        os << "solver diff max = " << fmt(max_diff, p) << "\n";
        os << "vieta sum abs = " << fmt(vr.sum_abs, p) << "\n";
        os << "vieta pairwise rel = " << fmt(vr.pairwise_rel, p) << "\n";
        os << "vieta product rel = " << fmt(vr.product_rel, p) << "\n";
        os << "forward residual max = " << fmt(vr.forward_max, p) << "\n";
    }
}

// ---- scan -----------------------------------------------------------------

void cmd_scan(double pmin, double pmax, int steps, const RunConfig& cfg) {
    if (!(pmin < pmax)) throw usage_error("scan: require pmin < pmax");
    const gupnl::GupParams params(cfg.beta, cfg.hbar);
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = pmin + (pmax - pmin) * static_cast<double>(i) /
                             static_cast<double>(steps - 1);
    const auto triples =
        gupnl::solve_grid(grid, params, gupnl::ExecutionPolicy::openmp);
    const int p = cfg.precision;
    Sink sink(cfg.out_path);

    const char* header =
        "P,root1_re,root1_im,root2_re,root2_im,root3_re,root3_im,"
        "vieta_sum_abs,vieta_pairwise_rel,vieta_product_rel,method";
    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < triples.size(); ++i) {
            const auto vr = vieta_residuals(triples[i], params);
            const auto ra = gupnl::roots_array(triples[i]);
            ordered_json row;
            row["P"] = round_sig(grid[i], p);
            row["roots"] = {jcomplex(ra[0], p), jcomplex(ra[1], p), jcomplex(ra[2], p)};
            row["vieta_sum_abs"] = round_sig(vr.sum_abs, p);
            row["vieta_pairwise_rel"] = round_sig(vr.pairwise_rel, p);
            row["vieta_product_rel"] = round_sig(vr.product_rel, p);
            row["method"] = gupnl::to_string(triples[i].method);
            rows.push_back(row);
        }
        ordered_json j;
        j["beta"] = round_sig(cfg.beta, p);
        j["rows"] = rows;
        sink.out() << j.dump() << "\n";
    } else {
        // csv and text share the table; text prefixes the header with '#'.
        if (cfg.format == "text") sink.out() << "# ";
        sink.out() << header << "\n";
        for (size_t i = 0; i < triples.size(); ++i) {
            const auto vr = vieta_residuals(triples[i], params);
            const auto ra = gupnl::roots_array(triples[i]);
            sink.out() << fmt(grid[i], p);
            for (const auto& r : ra)
                sink.out() << "," << fmt(r.real(), p) << "," << fmt(r.imag(), p);
            sink.out() << "," << fmt(vr.sum_abs, p) << "," << fmt(vr.pairwise_rel, p)
                       << "," << fmt(vr.product_rel, p) << ","
                       << gupnl::to_string(triples[i].method) << "\n";
        }
    }
}

// ---- entangle ---------------------------------------------------------------

void cmd_entangle(double P, const gupnl::CoefficientVector& alpha,
                  const gupnl::CoefficientVector& gamma, const RunConfig& cfg) {
    const gupnl::GupParams params(cfg.beta, cfg.hbar);
    const auto state = gupnl::build_entangled_state(P, alpha, gamma, params);
    const auto sd = gupnl::schmidt(state);
    const auto bell = gupnl::bell_benchmark();
    const auto corr = gupnl::correlation_structure(state);
    const auto contrast = gupnl::p_basis_vs_P_basis(state);
    const int p = cfg.precision;
    Sink sink(cfg.out_path);

    if (cfg.format == "json") {
        ordered_json j;
        j["P"] = round_sig(P, p);
        j["beta"] = round_sig(cfg.beta, p);
        j["norm_constant"] = round_sig(state.norm_constant, p);
        j["c"] = ordered_json::array();
        for (const auto& c : state.c) j["c"].push_back(jcomplex(c, p));
        j["lambdas"] = {round_sig(sd.lambdas[0], p), round_sig(sd.lambdas[1], p),
                        round_sig(sd.lambdas[2], p)};
        j["entropy_nats"] = round_sig(sd.entropy_nats, p);
        j["entropy_bits"] = round_sig(sd.entropy_bits, p);
        j["bell_benchmark"] = ordered_json{
            {"lambdas", {0.5, 0.5}},
            {"entropy_nats", round_sig(bell.entropy_nats, p)},
            {"entropy_bits", round_sig(bell.entropy_bits, p)},
            {"entropy_exceeds_bell", sd.entropy_nats > bell.entropy_nats}};
        ordered_json branches = ordered_json::array();
        for (const auto& b : corr.branches) {
            branches.push_back(ordered_json{{"branch", b.branch},
                                            {"outcome1", jcomplex(b.outcome_1, p)},
                                            {"outcome2", jcomplex(b.outcome_2, p)},
                                            {"probability", round_sig(b.probability, p)}});
        }
        j["correlation"] = ordered_json{
            {"branches", branches},
            {"partner_forward_residual", round_sig(corr.partner_forward_residual, p)},
            {"conditional_entropy_nats", round_sig(corr.conditional_entropy_nats, p)},
            {"mutual_information_nats", round_sig(corr.mutual_information_nats, p)},
            {"branch_momentum_conserved", corr.branch_momentum_conserved}};
        j["basis_contrast"] = ordered_json{
            {"single_outcome",
             {round_sig(contrast.single_outcome[0], p), round_sig(contrast.single_outcome[1], p)}},
            {"single_basis_entropy_nats", round_sig(contrast.single_basis_entropy_nats, p)},
            {"born_probs",
             {round_sig(contrast.born_probs[0], p), round_sig(contrast.born_probs[1], p),
              round_sig(contrast.born_probs[2], p)}},
            {"born_entropy_nats", round_sig(contrast.born_entropy_nats, p)}};
        sink.out() << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        sink.out() << "branch,c_re,c_im,lambda,outcome1_re,outcome1_im,outcome2_re,outcome2_im\n";
        for (int i = 0; i < 3; ++i) {
            const auto& b = corr.branches[i];
            sink.out() << i + 1 << "," << fmt(state.c[i].real(), p) << ","
                       << fmt(state.c[i].imag(), p) << ","
                       << fmt(std::norm(state.c[i]), p) << ","
                       << fmt(b.outcome_1.real(), p) << "," << fmt(b.outcome_1.imag(), p)
                       << "," << fmt(b.outcome_2.real(), p) << ","
                       << fmt(b.outcome_2.imag(), p) << "\n";
        }
        sink.out() << "# entropy_nats=" << fmt(sd.entropy_nats, p)
                   << " entropy_bits=" << fmt(sd.entropy_bits, p)
                   << " bell_entropy_nats=" << fmt(bell.entropy_nats, p)
                   << " mutual_information_nats=" << fmt(corr.mutual_information_nats, p)
                   << "\n";
    } else {
        auto& os = sink.out();
        os << "P = " << fmt(P, p) << "\n";
        os << "norm constant = " << fmt(state.norm_constant, p) << "\n";
        for (int i = 0; i < 3; ++i)
            os << "c" << i + 1 << " = " << fmt_complex(state.c[i], p) << "\n";
        os << "lambdas = " << fmt(sd.lambdas[0], p) << " " << fmt(sd.lambdas[1], p)
           << " " << fmt(sd.lambdas[2], p) << "\n";
        os << "entropy = " << fmt(sd.entropy_nats, p) << " nats = "
           << fmt(sd.entropy_bits, p) << " bits\n";
        os << "bell benchmark entropy = " << fmt(bell.entropy_nats, p) << " nats = "
           << fmt(bell.entropy_bits, p) << " bits\n";
        os << "entropy exceeds bell = "
           << (sd.entropy_nats > bell.entropy_nats ? "true" : "false") << "\n";
        for (const auto& b : corr.branches)
            os << "branch " << b.branch << ": outcome1 = " << fmt_complex(b.outcome_1, p)
               << ", outcome2 = " << fmt_complex(b.outcome_2, p)
               << ", probability = " << fmt(b.probability, p) << "\n";
        os << "conditional entropy = " << fmt(corr.conditional_entropy_nats, p)
           << " nats\n";
        os << "mutual information = " << fmt(corr.mutual_information_nats, p)
           << " nats\n";
        os << "P-basis entropy = " << fmt(contrast.single_basis_entropy_nats, p)
           << " nats\n";
        os << "p-basis entropy = " << fmt(contrast.born_entropy_nats, p) << " nats\n";
    }
}

// ---- sample -----------------------------------------------------------------

void cmd_sample(double P, const gupnl::CoefficientVector& alpha,
                const gupnl::CoefficientVector& gamma, std::uint64_t n,
                bool real_only, const RunConfig& cfg) {
    const gupnl::GupParams params(cfg.beta, cfg.hbar);
    const auto state = gupnl::build_entangled_state(P, alpha, gamma, params);
    const int p = cfg.precision;
    Sink sink(cfg.out_path);
    auto& os = sink.out();

    gupnl::SampleSummary summary{};
    if (cfg.format == "csv") {
        os << gupnl::record_csv_header(real_only) << "\n";
        summary = gupnl::sample_stream(state, n, cfg.seed, [&](const auto& rec) {
            os << gupnl::record_csv_row(rec, p, real_only) << "\n";
        });
    } else if (cfg.format == "json") {
        summary = gupnl::sample_stream(state, n, cfg.seed, [&](const auto& rec) {
            os << gupnl::record_jsonl(rec, p, real_only) << "\n";
        });
    } else {
        summary = gupnl::sample_stream(state, n, cfg.seed, [&](const auto& rec) {
            os << "draw " << rec.draw_ordinal << ": branch " << rec.branch_index
               << ", outcome1 = " << fmt_complex(rec.outcome_1, p)
               << ", outcome2 = " << fmt_complex(rec.outcome_2, p) << "\n";
        });
    }

    ordered_json js;
    js["type"] = "summary";
    js["seed"] = summary.seed;
    js["n"] = summary.n;
    js["counts"] = {summary.counts[0], summary.counts[1], summary.counts[2]};
    js["empirical_freqs"] = {round_sig(summary.empirical_freqs[0], p),
                             round_sig(summary.empirical_freqs[1], p),
                             round_sig(summary.empirical_freqs[2], p)};
    js["expected_probs"] = {round_sig(summary.expected_probs[0], p),
                            round_sig(summary.expected_probs[1], p),
                            round_sig(summary.expected_probs[2], p)};
    js["chi_square"] = round_sig(summary.chi_square, p);
    js["small_sample_warning"] = summary.small_sample_warning;

    if (cfg.format == "csv") {
        os << "# summary " << js.dump() << "\n";
    } else if (cfg.format == "json") {
        os << js.dump() << "\n";
    } else {
        os << "summary: counts = " << summary.counts[0] << " " << summary.counts[1]
           << " " << summary.counts[2] << ", chi_square = "
           << fmt(summary.chi_square, p) << ", seed = " << summary.seed << "\n";
        if (summary.small_sample_warning)
            os << "warning: some expected branch count is below 5; the chi-square "
                  "statistic is unreliable at this sample size\n";
    }
}

// ---- uncertainty ------------------------------------------------------------

void cmd_uncertainty(double dp_min, double dp_max, int steps, const RunConfig& cfg) {
    if (!(dp_min > 0.0) || !(dp_max > dp_min))
        throw usage_error("uncertainty: require 0 < dp-min < dp-max");
    const gupnl::GupParams params(cfg.beta, cfg.hbar);
    const double analytic = gupnl::minimal_length(params);
    const double numeric = gupnl::minimal_length_numeric(params);
    const double rel_diff = std::abs(analytic - numeric) / analytic;
    const int p = cfg.precision;
    Sink sink(cfg.out_path);

    std::vector<std::array<double, 2>> rows(steps);
    const double ratio = dp_max / dp_min;
    for (int i = 0; i < steps; ++i) {
        const double dp =
            dp_min * std::pow(ratio, static_cast<double>(i) / static_cast<double>(steps - 1));
        rows[i] = {dp, gupnl::uncertainty_product(dp, params)};
    }

    if (cfg.format == "json") {
        ordered_json j;
        j["beta"] = round_sig(cfg.beta, p);
        j["hbar"] = round_sig(cfg.hbar, p);
        j["grid"] = ordered_json::array();
        for (const auto& r : rows)
            j["grid"].push_back(
                ordered_json{{"dp", round_sig(r[0], p)}, {"dx", round_sig(r[1], p)}});
        j["minimal_length"] =
            ordered_json{{"analytic", round_sig(analytic, p)},
                         {"numeric", round_sig(numeric, p)},
                         {"rel_diff", round_sig(rel_diff, p)}};
        sink.out() << j.dump() << "\n";
    } else {
        if (cfg.format == "text") sink.out() << "# ";
        sink.out() << "dp,dx\n";
        for (const auto& r : rows)
            sink.out() << fmt(r[0], p) << "," << fmt(r[1], p) << "\n";
        sink.out() << "# minimal_length analytic=" << fmt(analytic, p)
                   << " numeric=" << fmt(numeric, p) << " rel_diff=" << fmt(rel_diff, p)
                   << "\n";
    }
}

// ---- limit ------------------------------------------------------------------

void cmd_limit(double P, double beta_start, int decades, int per_decade,
               const RunConfig& cfg) {
    if (!(beta_start > 0.0)) throw usage_error("limit: beta-start must be positive");
    const int p = cfg.precision;
    Sink sink(cfg.out_path);

    const int rows = decades * per_decade;
    ordered_json jrows = ordered_json::array();
    const bool json = cfg.format == "json";
    if (!json) {
        if (cfg.format == "text") sink.out() << "# ";
        sink.out() << "beta,root1,root1_minus_P,im_root2,im_root2_sqrt_beta,method\n";
    }
    for (int k = 0; k <= rows; ++k) {
        const double beta =
            beta_start * std::pow(10.0, -static_cast<double>(k) / per_decade);
        const gupnl::GupParams params(beta, cfg.hbar);
        const auto t = gupnl::cardano_roots(P, params);
        const double scaled_im = t.conj_pos.imag() * std::sqrt(beta);
        if (json) {
            jrows.push_back(ordered_json{{"beta", round_sig(beta, p)},
                                         {"root1", round_sig(t.real_root, p)},
                                         {"root1_minus_P", round_sig(t.real_root - P, p)},
                                         {"im_root2", round_sig(t.conj_pos.imag(), p)},
                                         {"im_root2_sqrt_beta", round_sig(scaled_im, p)},
                                         {"method", gupnl::to_string(t.method)}});
        } else {
            sink.out() << fmt(beta, p) << "," << fmt(t.real_root, p) << ","
                       << fmt(t.real_root - P, p) << "," << fmt(t.conj_pos.imag(), p)
                       << "," << fmt(scaled_im, p) << "," << gupnl::to_string(t.method)
                       << "\n";
        }
    }
    if (json) {
        ordered_json j;
        j["P"] = round_sig(P, p);
        j["rows"] = jrows;
        sink.out() << j.dump() << "\n";
    }
}

// Spec precedence is flags > environment > config file. CLI11 ranks a config
// file above the environment, so GUPNL_* variables are injected as trailing
// command-line tokens instead, but only when the flag is absent.
void inject_env(std::vector<std::string>& args, const std::string& flag,
                const char* env_name) {
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return;
    if (const char* value = std::getenv(env_name))
        args.push_back(flag + "=" + value);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal-length (GUP) momentum algebra toolkit", "gupnl"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--beta", cfg.beta, "GUP deformation parameter (momentum^-2)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--hbar", cfg.hbar, "Reduced Planck constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Master seed for sampling")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision, "Significant digits in output")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    app.set_config("--config", "", "key=value config file");

    const std::vector<std::string> uniform = {"0.5773502691896258", "0.5773502691896258",
                                              "0.5773502691896258"};

    double P = 0.0;
    auto* roots_cmd = app.add_subcommand("roots", "Solve the momentum cubic for one P");
    roots_cmd->fallthrough();
    roots_cmd->add_option("--P", P, "Generalized momentum")->required();
    roots_cmd->callback([&] { cmd_roots(P, cfg); });

    double pmin = -1.0, pmax = 1.0;
    int steps = 41;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate root triples over a P range");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--pmin", pmin, "Range start")->required();
    scan_cmd->add_option("--pmax", pmax, "Range end")->required();
    scan_cmd->add_option("--steps", steps, "Number of rows")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    scan_cmd->callback([&] { cmd_scan(pmin, pmax, steps, cfg); });

    double eP = 1.0;
    std::vector<std::string> alpha_toks = uniform, gamma_toks;
    auto* ent_cmd =
        app.add_subcommand("entangle", "Build the two-particle state and report entanglement");
    ent_cmd->fallthrough();
    ent_cmd->add_option("--P", eP, "Shared generalized momentum")->required();
    ent_cmd->add_option("--alpha", alpha_toks, "Three coefficients, re or re:im")
        ->expected(3);
    ent_cmd->add_option("--gamma", gamma_toks, "Three coefficients (default: alpha)")
        ->expected(3);
    ent_cmd->callback([&] {
        const auto a = parse_coeffs(alpha_toks);
        const auto g = gamma_toks.empty() ? a : parse_coeffs(gamma_toks);
        cmd_entangle(eP, a, g, cfg);
    });

    double sP = 1.0;
    std::uint64_t n = 1000;
    bool real_only = false;
    std::vector<std::string> s_alpha = uniform, s_gamma;
    auto* sample_cmd = app.add_subcommand("sample", "Born-rule sampling of outcome pairs");
    sample_cmd->fallthrough();
    sample_cmd->add_option("--P", sP, "Shared generalized momentum")->required();
    sample_cmd->add_option("--n", n, "Number of draws")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62));
    sample_cmd->add_option("--alpha", s_alpha, "Three coefficients, re or re:im")
        ->expected(3);
    sample_cmd->add_option("--gamma", s_gamma, "Three coefficients (default: alpha)")
        ->expected(3);
    sample_cmd->add_flag("--real-only", real_only,
                         "Project outcomes onto their real parts in records");
    sample_cmd->callback([&] {
        const auto a = parse_coeffs(s_alpha);
        const auto g = s_gamma.empty() ? a : parse_coeffs(s_gamma);
        cmd_sample(sP, a, g, n, real_only, cfg);
    });

    double dp_min = 0.01, dp_max = 100.0;
    int usteps = 41;
    auto* unc_cmd =
        app.add_subcommand("uncertainty", "Uncertainty product table and minimal length");
    unc_cmd->fallthrough();
    unc_cmd->add_option("--dp-min", dp_min, "Grid start")->check(CLI::PositiveNumber)
        ->capture_default_str();
    unc_cmd->add_option("--dp-max", dp_max, "Grid end")->check(CLI::PositiveNumber)
        ->capture_default_str();
    unc_cmd->add_option("--steps", usteps, "Number of rows")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    unc_cmd->callback([&] { cmd_uncertainty(dp_min, dp_max, usteps, cfg); });

    double lP = 1.0, beta_start = 0.01;
    int decades = 10, per_decade = 4;
    auto* limit_cmd =
        app.add_subcommand("limit", "Track the roots down a log-spaced beta ladder");
    limit_cmd->fallthrough();
    limit_cmd->add_option("--P", lP, "Generalized momentum")->required();
    limit_cmd->add_option("--beta-start", beta_start, "Ladder top")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    limit_cmd->add_option("--decades", decades, "Decades to descend")
        ->check(CLI::Range(1, 30))
        ->capture_default_str();
    limit_cmd->add_option("--per-decade", per_decade, "Rows per decade")
        ->check(CLI::Range(1, 100))
        ->capture_default_str();
    limit_cmd->callback([&] { cmd_limit(lP, beta_start, decades, per_decade, cfg); });

    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    inject_env(args, "--beta", "GUPNL_BETA");
    inject_env(args, "--hbar", "GUPNL_HBAR");
    inject_env(args, "--seed", "GUPNL_SEED");
    inject_env(args, "--format", "GUPNL_FORMAT");
    inject_env(args, "--precision", "GUPNL_PRECISION");
    inject_env(args, "--out", "GUPNL_OUT");
    inject_env(args, "--config", "GUPNL_CONFIG");
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const gupnl::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 65;
    } catch (const gupnl::invariant_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 65;
    } catch (const gupnl::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 66;
    } catch (const gupnl::range_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 66;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
