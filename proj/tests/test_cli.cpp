// End-to-end checks of the command-line tool, driven through the shell.
// The binary path arrives in GUPNL_CLI_BIN (set by ctest).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gupnl/measurement.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct CmdResult {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* cli_bin() {
    const char* bin = std::getenv("GUPNL_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "GUPNL_CLI_BIN must point at the gupnl binary");
    return bin;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string tag = std::to_string(++counter);
    const std::string out_path = "cli_out_" + tag + ".txt";
    const std::string err_path = "cli_err_" + tag + ".txt";
    const std::string cmd = env_prefix + std::string(cli_bin()) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    CmdResult res{WEXITSTATUS(raw), slurp(out_path), slurp(err_path)};
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

}  // namespace

TEST_CASE("roots at P=0 emits the exact factorized pair") {
    const auto res = run_cli("roots --P 0 --beta 0.25 --format json");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(j["roots"][0]["re"].get<double>() == 0.0);
    CHECK(j["roots"][1]["im"].get<double>() == 2.0);
    CHECK(j["roots"][2]["im"].get<double>() == -2.0);
    CHECK(j["method"] == "closed_form");
}

TEST_CASE("roots at P=1, beta=1 reports the known real root") {
    const auto res = run_cli("roots --P 1 --beta 1 --format json");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(std::abs(j["roots"][0]["re"].get<double>() - 0.6823278038280193) < 1e-9);
    CHECK(j["solver_diff_max"].get<double>() < 1e-9);
    CHECK(j["vieta"]["sum_abs"].get<double>() < 1e-10);
}

TEST_CASE("roots switches to the series path for tiny beta") {
    const auto res = run_cli("roots --P 1 --beta 1e-12 --format json");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(j["method"] == "series");
    // Cross-solver residual, relative to the 1e6-sized pair members.
    CHECK(j["solver_diff_max"].get<double>() < 1e-9 * 1e6);
    CHECK(j["forward_residual_max"].get<double>() < 1e-8);
}

TEST_CASE("json documents round-trip byte for byte") {
    for (const char* cmd :
         {"roots --P 1.5 --beta 0.3 --format json",
          "entangle --P 1 --format json",
          "uncertainty --dp-min 0.1 --dp-max 10 --steps 5 --format json",
          "limit --P 1 --beta-start 0.01 --decades 3 --format json"}) {
        const auto res = run_cli(cmd);
        REQUIRE(res.status == 0);
        const auto j = ordered_json::parse(res.out);
        CHECK(j.dump() + "\n" == res.out);
    }
}

TEST_CASE("sample output is deterministic and re-serializable") {
    const std::string flags = "sample --P 1 --n 50 --seed 7 --beta 0.5 --format json";
    const auto a = run_cli(flags);
    const auto b = run_cli(flags);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);

    // Each record line reparses into a record that serializes back to the
    // same bytes; the final line is the summary.
    std::istringstream lines(a.out);
    std::string line;
    int records = 0;
    std::string last;
    while (std::getline(lines, line)) {
        last = line;
        const auto j = ordered_json::parse(line);
        if (j.contains("type")) continue;
        gupnl::MeasurementRecord rec{
            j["branch"].get<int>(),
            {j["outcome1"]["re"].get<double>(), j["outcome1"]["im"].get<double>()},
            {j["outcome2"]["re"].get<double>(), j["outcome2"]["im"].get<double>()},
            j["draw"].get<std::uint64_t>()};
        CHECK(gupnl::record_jsonl(rec) == line);
        ++records;
    }
    CHECK(records == 50);
    const auto summary = ordered_json::parse(last);
    CHECK(summary["type"] == "summary");
    CHECK(summary["n"].get<int>() == 50);
    CHECK(summary["counts"].size() == 3);
}

TEST_CASE("sample pairs are negations in csv mode") {
    const auto res = run_cli("sample --P 1 --n 20 --seed 3 --format csv");
    REQUIRE(res.status == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == gupnl::record_csv_header());
    while (std::getline(lines, line) && line[0] != '#') {
        double o1re, o1im, o2re, o2im;
        int draw, branch;
        REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf,%lf", &draw, &branch,
                            &o1re, &o1im, &o2re, &o2im) == 6);
        CHECK(o2re == -o1re);
        CHECK(o2im == -o1im);
    }
    CHECK(line.rfind("# summary ", 0) == 0);
}

TEST_CASE("scan covers the degenerate midpoint and odd symmetry") {
    const auto res = run_cli("scan --pmin -1 --pmax 1 --steps 3 --beta 1 --format csv");
    REQUIRE(res.status == 0);
    std::istringstream lines(res.out);
    std::string header, row0, row1, row2;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, row2);
    // Middle row is the exact P = 0 triple.
    CHECK(row1.rfind("0,0,0,0,1,0,-1,", 0) == 0);
    // p1 column is odd about P = 0.
    double p_a = 0.0, r_a = 0.0, p_c = 0.0, r_c = 0.0;
    std::sscanf(row0.c_str(), "%lf,%lf", &p_a, &r_a);
    std::sscanf(row2.c_str(), "%lf,%lf", &p_c, &r_c);
    CHECK(p_a == -p_c);
    CHECK(r_a == doctest::Approx(-r_c).epsilon(1e-12));

    // Row-wise forward-map recomputation from the emitted digits.
    for (const std::string& row : {row0, row2}) {
        double P, re[3], im[3];
        REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &P, &re[0],
                            &im[0], &re[1], &im[1], &re[2], &im[2]) == 7);
        for (int k = 0; k < 3; ++k) {
            const std::complex<double> p(re[k], im[k]);
            CHECK(std::abs(p * (1.0 + p * p) - std::complex<double>(P)) <=
                  1e-9 * std::max(1.0, std::abs(P)));
        }
    }
}

TEST_CASE("uncertainty reports matching analytic and numeric minima") {
    const auto res = run_cli(
        "uncertainty --beta 0.333333333333333333 --dp-min 0.1 --dp-max 10 --steps 5 "
        "--format json");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(std::abs(j["minimal_length"]["analytic"].get<double>() - 1.0) < 1e-12);
    CHECK(j["minimal_length"]["rel_diff"].get<double>() < 1e-8);

    const auto b002 = run_cli("uncertainty --beta 0.02 --format json");
    const auto j2 = ordered_json::parse(b002.out);
    CHECK(std::abs(j2["minimal_length"]["analytic"].get<double>() - 0.2449489742783178) <
          1e-10);
}

TEST_CASE("limit ladder flattens onto the canonical momentum") {
    const auto res =
        run_cli("limit --P 1 --beta-start 0.01 --decades 8 --per-decade 2 --format json");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    double prev = 1e300;
    for (const auto& row : j["rows"]) {
        const double gap = std::abs(row["root1_minus_P"].get<double>());
        CHECK(gap <= prev);
        prev = gap;
    }
    const auto& lastrow = j["rows"].back();
    CHECK(lastrow["beta"].get<double>() == 1e-10);
    CHECK(std::abs(lastrow["im_root2_sqrt_beta"].get<double>() - 1.0) < 1e-7);

    const auto zero = run_cli("limit --P 0 --beta-start 1 --decades 3 --format json");
    for (const auto& row : ordered_json::parse(zero.out)["rows"])
        CHECK(row["root1"].get<double>() == 0.0);
}

TEST_CASE("exit codes distinguish usage, domain, and parse errors") {
    CHECK(run_cli("").status == 64);                        // missing subcommand
    CHECK(run_cli("roots").status == 64);                   // missing --P
    CHECK(run_cli("roots --P 1 --beta -1").status == 64);   // flag validation
    CHECK(run_cli("roots --P 1 --format yaml").status == 64);
    CHECK(run_cli("sample --P 1 --n 0").status == 64);
    CHECK(run_cli("roots --P nan").status == 65);           // library domain error
    CHECK(run_cli("entangle --P 1 --alpha 1 0 0 --gamma 0 1 0").status == 65);
    CHECK(run_cli("entangle --P 1 --alpha 1x2 0 0").status == 64);  // bad coefficient
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("roots --help").status == 0);
}

TEST_CASE("environment variables feed global flags") {
    const auto res = run_cli("roots --P 0 --format json", "GUPNL_BETA=0.25 ");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(j["roots"][1]["im"].get<double>() == 2.0);

    // Command line beats the environment.
    const auto flag = run_cli("roots --P 0 --beta 1 --format json", "GUPNL_BETA=0.25 ");
    CHECK(ordered_json::parse(flag.out)["roots"][1]["im"].get<double>() == 1.0);
}

TEST_CASE("config file feeds flags below the environment") {
    std::ofstream cfg("gupnl_test.cfg");
    cfg << "beta=0.25\nformat=json\n";
    cfg.close();
    const auto res = run_cli("roots --P 0 --config gupnl_test.cfg");
    REQUIRE(res.status == 0);
    CHECK(ordered_json::parse(res.out)["roots"][1]["im"].get<double>() == 2.0);

    // Environment overrides the file.
    const auto env =
        run_cli("roots --P 0 --config gupnl_test.cfg", "GUPNL_BETA=1 ");
    CHECK(ordered_json::parse(env.out)["roots"][1]["im"].get<double>() == 1.0);
    std::remove("gupnl_test.cfg");
}

TEST_CASE("--out writes the same bytes a stdout run produces") {
    const auto direct = run_cli("roots --P 2 --beta 0.5 --format json");
    const auto filed = run_cli("roots --P 2 --beta 0.5 --format json --out cli_file_out.json");
    REQUIRE(filed.status == 0);
    CHECK(filed.out.empty());
    CHECK(slurp("cli_file_out.json") == direct.out);
    std::remove("cli_file_out.json");
}

TEST_CASE("precision flag shortens emitted values") {
    const auto res = run_cli("roots --P 1 --beta 1 --format json --precision 6");
    REQUIRE(res.status == 0);
    const auto j = ordered_json::parse(res.out);
    CHECK(j["roots"][0]["re"].get<double>() == 0.682328);
    CHECK(j.dump() + "\n" == res.out);
}
