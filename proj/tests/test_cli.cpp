#include "cli.hpp"
#include "io.hpp"

#include <spinfloq/dynamics.hpp>
#include <spinfloq/rng.hpp>
#include <spinfloq/state.hpp>

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using namespace spinfloq;
using spinfloq::cli::run_cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("spinfloq_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string prefix(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("angle grammar") {
    CHECK(cli::parse_angle("0.1pi") == doctest::Approx(0.1 * std::numbers::pi));
    CHECK(cli::parse_angle("pi") == doctest::Approx(std::numbers::pi));
    CHECK(cli::parse_angle("0.25") == doctest::Approx(0.25));
    CHECK(cli::parse_angle("-0.5pi") == doctest::Approx(-0.5 * std::numbers::pi));
    CHECK_THROWS(cli::parse_angle("0.1tau"));
}

TEST_CASE("evolve writes the documented csv and manifest") {
    TempDir dir;
    const std::string prefix = dir.prefix("run");
    const int code = run_cli({"evolve", "--type", "ising", "--n", "7", "--az", "1.3",
                              "--bz", "100", "--omega", "1", "--theta", "0.1pi",
                              "--initial", "m:5,up", "--cycles", "10", "--stride", "2",
                              "-o", prefix});
    CHECK(code == 0);

    const auto lines = split_lines(slurp(prefix + ".csv"));
    REQUIRE(lines.size() == 7);  // header + cycles 0,2,4,6,8,10
    CHECK(lines[0] == "cycle,magnetization,staggered");
    CHECK(lines[1].rfind("0,", 0) == 0);

    const nlohmann::json manifest = nlohmann::json::parse(slurp(prefix + ".manifest.json"));
    CHECK(manifest["tool"]["name"] == "spinfloq");
    CHECK(manifest["subcommand"] == "evolve");
    CHECK(manifest["parameters"]["theta_e_rad"].get<double>() ==
          doctest::Approx(0.1 * std::numbers::pi));
    CHECK(manifest["parameters"]["initial"] == "m:5,up");
    REQUIRE(manifest["outputs"].size() == 1);
    const std::string csv_bytes = slurp(prefix + ".csv");
    CHECK(manifest["outputs"][0]["fnv1a64"] ==
          cli::to_hex(cli::fnv1a64(csv_bytes)));
    CHECK(manifest["outputs"][0]["bytes"].get<std::uint64_t>() == csv_bytes.size());
}

TEST_CASE("evolve with zero cycles emits a single data row") {
    TempDir dir;
    const std::string prefix = dir.prefix("zero");
    CHECK(run_cli({"evolve", "--type", "ising", "--n", "5", "--az", "1", "--cycles", "0",
                   "-o", prefix}) == 0);
    CHECK(split_lines(slurp(prefix + ".csv")).size() == 2);
}

TEST_CASE("identical invocations produce identical csv bytes") {
    TempDir dir;
    const std::vector<std::string> base{"evolve", "--type",   "xxz",  "--n",     "7",
                                        "--axy",  "1.3",      "--az", "3.3",     "--bz",
                                        "100",    "--theta",  "0.1pi", "--cycles", "50"};
    auto run_once = [&](const std::string& prefix) {
        std::vector<std::string> args = base;
        args.push_back("-o");
        args.push_back(prefix);
        REQUIRE(run_cli(args) == 0);
        return slurp(prefix + ".csv");
    };
    CHECK(run_once(dir.prefix("a")) == run_once(dir.prefix("b")));
}

TEST_CASE("config file fills defaults but flags win") {
    TempDir dir;
    const std::string config = dir.prefix("config.json");
    {
        std::ofstream out(config);
        out << R"({"cycles": 4, "az": 2.0, "type": "ising", "n": 5})";
    }
    const std::string prefix = dir.prefix("cfg");
    CHECK(run_cli({"evolve", "--config", config, "--cycles", "6", "-o", prefix}) == 0);
    const auto manifest = nlohmann::json::parse(slurp(prefix + ".manifest.json"));
    CHECK(manifest["parameters"]["cycles"] == 6);            // flag overrides config
    CHECK(manifest["parameters"]["a_z"] == doctest::Approx(2.0));  // config fills in
    CHECK(manifest["parameters"]["type"] == "ising");
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("usage errors exit with code one") {
    CHECK(run_cli({"evolve"}) == 1);                      // missing --output
    CHECK(run_cli({"no-such-command"}) == 1);
    CHECK(run_cli({}) == 1);
    TempDir dir;
    CHECK(run_cli({"scar", "--n", "5", "--a", "1.0", "-o", dir.prefix("odd")}) == 1);
    CHECK(run_cli({"evolve", "--type", "ising", "--axy", "2", "--n", "5", "-o",
                   dir.prefix("bad")}) == 1);
}

TEST_CASE("phase sweep csv is row-major with the axes as specified") {
    TempDir dir;
    const std::string prefix = dir.prefix("grid");
    const int code =
        run_cli({"phase", "--type", "ising", "--n", "5", "--x", "az:1:2:2", "--y",
                 "bz:0:50:2", "--nc", "50", "--theta", "0.03pi", "--initial", "J-up",
                 "--svg", "-o", prefix});
    CHECK(code == 0);
    const auto lines = split_lines(slurp(prefix + ".csv"));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "x,y,order_parameter");
    CHECK(lines[1].rfind("1,0,", 0) == 0);
    CHECK(lines[2].rfind("2,0,", 0) == 0);
    CHECK(lines[3].rfind("1,50,", 0) == 0);

    const std::string svg = slurp(prefix + ".svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("a_z") != std::string::npos);

    // the 1x1 grid agrees with a direct library call
    const std::string single = dir.prefix("single");
    REQUIRE(run_cli({"phase", "--type", "ising", "--n", "5", "--x", "az:1:1:1", "--y",
                     "bz:0:0:1", "--nc", "50", "--theta", "0.03pi", "--initial", "J-up",
                     "-o", single}) == 0);
    const auto data = split_lines(slurp(single + ".csv"));
    REQUIRE(data.size() == 2);
    ModelParams params;
    params.a_z = 1.0;
    params.theta_e = params.theta_n = 0.03 * std::numbers::pi;
    const SectorBasis basis(5, 5);
    const double expected = order_parameter(build_floquet(params, basis),
                                            basis_state(basis, 5, Spin::up), 50);
    const std::string cell = data[1].substr(data[1].rfind(',') + 1);
    CHECK(std::stod(cell) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("krylov subcommand writes overlaps and the census") {
    TempDir dir;
    const std::string prefix = dir.prefix("kry");
    const int code = run_cli({"krylov", "--type", "heisenberg", "--n", "5", "--a", "1.3",
                              "--bz", "100", "--theta", "0", "--initial", "J-down",
                              "--sampler", "stride:1,max:3", "-o", prefix});
    CHECK(code == 0);
    const auto lines = split_lines(slurp(prefix + ".csv"));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].rfind("cycle,m5_u,m5_d,", 0) == 0);
    // n = 0 row: all the weight on the initial state (third column, m5_d)
    {
        std::istringstream row(lines[1]);
        std::string cell;
        std::getline(row, cell, ',');
        CHECK(cell == "0");
        std::getline(row, cell, ',');
        CHECK(std::stod(cell) < 1e-12);
        std::getline(row, cell, ',');
        CHECK(std::stod(cell) == doctest::Approx(1.0).epsilon(1e-10));
    }

    const auto census = split_lines(slurp(prefix + "_dimensions.csv"));
    REQUIRE(census.size() == 13);  // header + 12 basis states
    CHECK(census[0] == "label,floquet_krylov_dim");
    CHECK(census[1] == "m5_u,2");   // |J up> pairs with |-J down>
    CHECK(census[2] == "m5_d,4");

    CHECK(run_cli({"krylov", "--type", "ising", "--n", "5", "--az", "1", "--sampler",
                   "bogus", "-o", dir.prefix("x")}) == 1);
}

TEST_CASE("scar subcommand emits one record per eigenstate") {
    TempDir dir;
    const std::string prefix = dir.prefix("scar");
    const int code = run_cli({"scar", "--type", "heisenberg", "--n", "6", "--a",
                              "1.41421356", "--bz", "100", "-o", prefix});
    CHECK(code == 0);
    const auto lines = split_lines(slurp(prefix + ".csv"));
    REQUIRE(lines.size() == 15);  // header + 2(N+1) records
    CHECK(lines[0] ==
          "quasienergy_over_omega,entropy_nats,overlap_plus,overlap_minus,degenerate_flag");
}

TEST_CASE("disorder subcommand is seed-reproducible") {
    TempDir dir;
    const std::vector<std::string> base{"disorder", "--type", "xx",   "--n",    "5",
                                        "--axy",    "5.7",    "--bz", "0",      "--theta",
                                        "0.03pi",   "--seed", "11",   "--realizations",
                                        "3",        "--nc",   "500"};
    auto run_once = [&](const std::string& prefix, const std::string& delta) {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--delta-axy", delta, "-o", prefix});
        REQUIRE(run_cli(args) == 0);
        return slurp(prefix + ".csv");
    };
    const std::string first = run_once(dir.prefix("d1"), "0.1");
    const std::string second = run_once(dir.prefix("d2"), "0.1");
    CHECK(first == second);
    CHECK(split_lines(first).size() == 4);
    CHECK(split_lines(first)[0] == "realization,seed,delta_axy,order_parameter");

    // product-state grammar
    CHECK(run_cli({"disorder", "--type", "xx", "--n", "3", "--axy", "1.0", "--initial",
                   "bits:uud,d", "--nc", "10", "--seed", "3", "-o",
                   dir.prefix("bits")}) == 0);

    // series mode emits per-cycle rows
    const std::string series = dir.prefix("series");
    REQUIRE(run_cli({"disorder", "--type", "xx", "--n", "3", "--axy", "1.0", "--nc", "5",
                     "--seed", "3", "--series", "-o", series}) == 0);
    const auto rows = split_lines(slurp(series + ".csv"));
    REQUIRE(rows.size() == 7);  // header + cycles 0..5
    CHECK(rows[0] == "realization,cycle,magnetization,staggered");
    CHECK(nlohmann::json::parse(slurp(series + ".manifest.json"))["rng"]["identity"] ==
          rng_identity_string);
}

TEST_CASE("verify subcommand passes") {
    CHECK(run_cli({"verify"}) == 0);
}
