// Subprocess harness for the command-line tool: exit codes, file outputs,
// and byte-level determinism of generated artifacts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "projcong/body_io.hpp"
#include "projcong/frame.hpp"
#include "projcong/rng.hpp"
#include "projcong/sphere_analysis.hpp"

using namespace projcong;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code{-1};
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PROJCONG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "projcong_cli_tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("gen: ball file is the constant series") {
    const fs::path out = scratch_dir() / "ball.json";
    const RunResult r = run_cli("gen ball --radius 2 --output " + out.string());
    REQUIRE(r.exit_code == 0);
    const BodyPtr body = load_body(out.string());
    Rng rng(1);
    for (int i = 0; i < 20; ++i)
        CHECK(body->support(rng.unit_vector()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gen: fixed seed reproduces byte-identical polytope files") {
    const fs::path a = scratch_dir() / "pa.json";
    const fs::path b = scratch_dir() / "pb.json";
    REQUIRE(run_cli("gen polytope --vertices 30 --seed 7 --output " + a.string()).exit_code == 0);
    REQUIRE(run_cli("gen polytope --vertices 30 --seed 7 --output " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));

    const fs::path c = scratch_dir() / "pc.json";
    REQUIRE(run_cli("gen polytope --vertices 30 --seed 8 --output " + c.string()).exit_code == 0);
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("gen: cw-harmonic passes the width test on random frames") {
    const fs::path out = scratch_dir() / "cw.json";
    REQUIRE(run_cli("gen cw-harmonic --eps 0.05 --output " + out.string()).exit_code == 0);
    const BodyPtr body = load_body(out.string());
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const SpreadResult r =
            constant_width_test(*body, frame_for(rng.unit_vector()), 256, 1e-7);
        CHECK(r.constant);
    }
}

TEST_CASE("classify: exit codes for the three fixture pairs") {
    const fs::path dir = scratch_dir();
    const fs::path k = dir / "K.json";
    REQUIRE(run_cli("gen polytope --vertices 30 --seed 7 --output " + k.string()).exit_code == 0);
    REQUIRE(run_cli("gen reflected --of " + k.string() + " --output " + (dir / "Kr.json").string())
                .exit_code == 0);
    REQUIRE(run_cli("gen rotated --of " + k.string() +
                    " --axis 0 0 1 --fraction 0.37 --output " + (dir / "Kq.json").string())
                .exit_code == 0);

    const RunResult same = run_cli("classify --body-k " + k.string() + " --body-l " + k.string() +
                                   " --grid 50 --circle-samples 128");
    CHECK(same.exit_code == 0);
    CHECK(same.output.find("verdict: Equal") != std::string::npos);

    const RunResult refl = run_cli("classify --body-k " + k.string() + " --body-l " +
                                   (dir / "Kr.json").string() + " --grid 50 --circle-samples 128");
    CHECK(refl.exit_code == 0);
    CHECK(refl.output.find("verdict: ReflectedEqual") != std::string::npos);

    const RunResult rot = run_cli("classify --body-k " + k.string() + " --body-l " +
                                  (dir / "Kq.json").string() + " --grid 50 --circle-samples 128");
    CHECK(rot.exit_code == 2);
    CHECK(rot.output.find("HypothesisViolated") != std::string::npos);
}

TEST_CASE("classify: unreadable input exits 1") {
    const RunResult r = run_cli("classify --body-k /nonexistent/k.json --body-l /nonexistent/l.json");
    CHECK(r.exit_code == 1);
}

TEST_CASE("classify: reports are byte-identical across runs and thread caps") {
    const fs::path dir = scratch_dir();
    const fs::path k = dir / "Kdet.json";
    REQUIRE(run_cli("gen polytope --vertices 20 --seed 11 --output " + k.string()).exit_code == 0);

    const fs::path r1 = dir / "rep1.json";
    const fs::path r2 = dir / "rep2.json";
    const std::string base = "classify --body-k " + k.string() + " --body-l " + k.string() +
                             " --grid 50 --circle-samples 128 --output ";
    REQUIRE(run_cli(base + r1.string()).exit_code == 0);
    const std::string env_cmd = "PROJCONG_THREADS=1 " + std::string(PROJCONG_CLI_PATH);
    // determinism under a different worker cap
    {
        const std::string cmd = env_cmd + " " + base + r2.string() + " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        while (std::fread(buf, 1, sizeof(buf), pipe) > 0) {
        }
        REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    }
    CHECK(slurp(r1) == slurp(r2));

    const fs::path csv = dir / "rep.csv";
    REQUIRE(run_cli(base + csv.string() + " --format csv").exit_code == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("pole_x,pole_y,pole_z,tag,", 0) == 0);
}

TEST_CASE("quartic: symmetric point and table output") {
    const RunResult r = run_cli("quartic --a 2 --b 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pairs: 1") != std::string::npos);
    CHECK(r.output.find("x=1 y=1") != std::string::npos);

    const fs::path table = scratch_dir() / "quartic.csv";
    REQUIRE(run_cli("quartic --a 3 --b 1.25 --output " + table.string()).exit_code == 0);
    const std::string csv = slurp(table);
    CHECK(csv.rfind("x,y,residual\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    CHECK(run_cli("quartic --a -1 --b 2").exit_code != 0);
}

TEST_CASE("orbit: quarter-turn covering radius") {
    const RunResult r = run_cli("orbit --r 0.5 --n 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("covering radius: 1.5707963267948966") != std::string::npos);
}

TEST_CASE("radon: eigenfunction residual reported and table written") {
    const fs::path table = scratch_dir() / "radon.csv";
    const RunResult r = run_cli("radon --f legendre2 --grid 406 --nquad 2048 --output " +
                                table.string());
    REQUIRE(r.exit_code == 0);

    // parse "max |Rf + f/2|: <value>" from the summary
    const std::string needle = "max |Rf + f/2|: ";
    const auto pos = r.output.find(needle);
    REQUIRE(pos != std::string::npos);
    const double residual = std::strtod(r.output.c_str() + pos + needle.size(), nullptr);
    CHECK(residual < 1e-6);

    const std::string csv = slurp(table);
    CHECK(csv.rfind("pole_x,pole_y,pole_z,value\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 813);
}
