#include "qcadp/cli/commands.hpp"

#include <doctest.h>

#include <fstream>

using namespace qcadp;
using namespace qcadp::cli;

namespace {

namespace fs = std::filesystem;

fs::path write_tmp(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

} // namespace

TEST_CASE("config: unknown keys are rejected by name") {
    auto p = write_tmp("qcadp_cfg_unknown.json", R"({"model": "full", "tyop": 1})");
    CHECK_THROWS_WITH_AS(load_config(p), doctest::Contains("tyop"), std::runtime_error);
    fs::remove(p);
}

TEST_CASE("config: missing required field is named") {
    auto p = write_tmp("qcadp_cfg_missing.json", R"({"fit": {"threshold": 1e-4}})");
    CHECK_THROWS_WITH_AS(load_config(p), doctest::Contains("model"), std::runtime_error);
    fs::remove(p);
}

TEST_CASE("config: wrong-size cost vector is rejected") {
    auto p = write_tmp("qcadp_cfg_shape.json",
                       R"({"model": "full", "stage_cost": {"q": [1, 2, 3]}})");
    CHECK_THROWS_WITH_AS(load_config(p), doctest::Contains("stage_cost.q"), std::runtime_error);
    fs::remove(p);
}

TEST_CASE("config: nested unknown keys are rejected") {
    auto p = write_tmp("qcadp_cfg_nested.json",
                       R"({"model": "planar", "sim": {"duratoin": 3.0}})");
    CHECK_THROWS_WITH_AS(load_config(p), doctest::Contains("duratoin"), std::runtime_error);
    fs::remove(p);
}

TEST_CASE("fit + cut + compare round-trip on a tiny planar family") {
    // one weight, initial fit only: fast enough for a unit test
    auto cfg_path = write_tmp("qcadp_cfg_tiny.json", R"({
        "model": "planar",
        "weights": {"scales": [1.0]},
        "fit": {"threshold": 1e300, "jobs": 1}
    })");
    auto cfg = load_config(cfg_path);

    const fs::path out = fs::temp_directory_path() / "qcadp_cli_out";
    fs::remove_all(out);
    CliOptions opt;
    opt.out_dir = out;

    REQUIRE(cmd_fit(cfg, opt) == kExitOk);
    CHECK(fs::exists(out / "family.txt"));
    CHECK(fs::exists(out / "fit_trace.csv"));

    // idempotence guard: rerun without --force refuses
    CHECK(cmd_fit(cfg, opt) == kExitUsage);
    opt.force = true;
    auto read_file = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string first = read_file(out / "family.txt");
    CHECK(cmd_fit(cfg, opt) == kExitOk);
    // reruns on an unchanged config reproduce the family byte-for-byte
    CHECK(read_file(out / "family.txt") == first);

    // cut consumes the family file
    auto cfg2_path = write_tmp("qcadp_cfg_tiny2.json", std::string(R"({
        "model": "planar",
        "weights": {"scales": [1.0]},
        "family_file": ")") + (out / "family.txt").string() + R"("
    })");
    auto cfg2 = load_config(cfg2_path);
    REQUIRE(cmd_cut(cfg2, opt) == kExitOk);
    std::ifstream cuts(out / "cuts.csv");
    std::string header_comment, header;
    std::getline(cuts, header_comment);
    std::getline(cuts, header);
    CHECK(header_comment.find("# config_hash=") == 0);
    CHECK(header == "x,member_0,pwm,argmax");

    fs::remove(cfg_path);
    fs::remove(cfg2_path);
    fs::remove_all(out);
}

TEST_CASE("compare without policies is a clean usage error") {
    auto cfg_path = write_tmp("qcadp_cfg_nopol.json", R"({"model": "full"})");
    auto cfg = load_config(cfg_path);
    CliOptions opt;
    opt.out_dir = fs::temp_directory_path() / "qcadp_cli_out2";
    CHECK(cmd_compare(cfg, opt) == kExitUsage);
    CHECK(cmd_bench(cfg, opt) == kExitOk); // explicit no-op message
    fs::remove(cfg_path);
    fs::remove_all(opt.out_dir);
}

TEST_CASE("compare smoke test with the linear policies") {
    auto cfg_path = write_tmp("qcadp_cfg_compare.json", R"({
        "model": "full",
        "policies": [{"kind": "LTI-MPC-LQR", "horizon": 1},
                      {"kind": "LTV-MPC-LQR", "horizon": 1}],
        "horizons": [1],
        "sim": {"duration": 4.0}
    })");
    auto cfg = load_config(cfg_path);
    CliOptions opt;
    opt.out_dir = fs::temp_directory_path() / "qcadp_cli_out3";
    fs::remove_all(opt.out_dir);
    opt.jobs = 2;
    REQUIRE(cmd_compare(cfg, opt) == kExitOk);
    CHECK(fs::exists(opt.out_dir / "metrics.csv"));
    CHECK(fs::exists(opt.out_dir / "trace_LTI-MPC-LQR_N1.csv"));
    CHECK(fs::exists(opt.out_dir / "trace_LTV-MPC-LQR_N1.csv"));
    fs::remove(cfg_path);
    fs::remove_all(opt.out_dir);
}
