// End-to-end checks of the polycalc binary: exit codes, JSON/CSV round-trips
// and the documented subcommands.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <polycalc/io.hpp>
#include <polycalc/polycalc.hpp>

using namespace polycalc;
namespace fs = std::filesystem;

namespace {

struct CliFixture {
  fs::path dir;

  CliFixture() {
    dir = fs::temp_directory_path() / ("polycalc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write_body(unit_square(), (dir / "square.json").string(), "unit square");
    write_body(box2(0, 0, 1, 2), (dir / "rect12.json").string(), "rect 1x2");
    write_body(diamond(), (dir / "diamond.json").string(), "diamond");
    write_body(octagon_gauge(), (dir / "e8.json").string(), "octagon gauge");
  }
  ~CliFixture() { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  int run(const std::string& args, const std::string& stdout_file = "") const {
    std::string cmd = std::string(POLYCALC_CLI_PATH) + " " + args;
    if (!stdout_file.empty()) cmd += " > " + path(stdout_file);
    cmd += " 2> " + path("stderr.txt");
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

}  // namespace

TEST_CASE("info prints measures and exits 0") {
  CliFixture fx;
  CHECK(fx.run("info " + fx.path("square.json"), "info.txt") == 0);
  std::string out = fx.slurp("info.txt");
  CHECK(out.find("volume 1") != std::string::npos);
  CHECK(out.find("classical surface 4") != std::string::npos);
}

TEST_CASE("inradius of the square against the 1x2 rectangle gauge") {
  CliFixture fx;
  CHECK(fx.run("--format json inradius " + fx.path("square.json") + " " + fx.path("rect12.json"),
               "inr.json") == 0);
  auto j = nlohmann::json::parse(fx.slurp("inr.json"));
  CHECK(j["r"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("parallel body round-trips through a body file") {
  CliFixture fx;
  CHECK(fx.run("parallel " + fx.path("square.json") + " " + fx.path("rect12.json") +
               " --lambda 1 -o " + fx.path("k1.json")) == 0);
  Polytope K1 = read_body(fx.path("k1.json"));
  CHECK(bodies_equal(K1, box2(0, 0, 2, 3), eps_geom()));
}

TEST_CASE("wulff, envelope and formbody subcommands") {
  CliFixture fx;
  CHECK(fx.run("wulff " + fx.path("square.json") + " " + fx.path("e8.json") +
               " --omega axes --lambda 1 -o " + fx.path("w.json")) == 0);
  CHECK(bodies_equal(read_body(fx.path("w.json")), box2(-1, -1, 2, 2), eps_geom()));

  CHECK(fx.run("envelope " + fx.path("e8.json") + " --omega axes -o " + fx.path("env.json")) == 0);
  CHECK(bodies_equal(read_body(fx.path("env.json")), box2(-1, -1, 1, 1), eps_geom()));

  CHECK(fx.run("formbody " + fx.path("square.json") + " " + fx.path("e8.json") + " -o " +
               fx.path("fb.json")) == 0);
  CHECK(bodies_equal(read_body(fx.path("fb.json")), box2(-1, -1, 1, 1), eps_geom()));
}

TEST_CASE("curve emits csv and svg; csv starts at 16 and ends near 8") {
  CliFixture fx;
  CHECK(fx.run("curve " + fx.path("square.json") + " " + fx.path("diamond.json") +
               " --lmin -0.45 --lmax 4 --steps 64 -o " + fx.path("curve.csv") + " --svg " +
               fx.path("curve.svg")) == 0);
  std::ifstream in(fx.path("curve.csv"));
  CurveTable t = read_curve_csv(in);
  REQUIRE(t.rows.size() == 64);
  size_t icol = 0;
  for (size_t i = 0; i < t.header.size(); ++i)
    if (t.header[i] == "I") icol = i;
  CHECK(t.rows.front()[icol] == doctest::Approx(16.0).epsilon(1e-9));
  CHECK(t.rows.back()[icol] == doctest::Approx(400.0 / 49.0).epsilon(1e-9));
  CHECK(fx.slurp("curve.svg").find("<svg") != std::string::npos);
}

TEST_CASE("check returns 0 on passing laws") {
  CliFixture fx;
  CHECK(fx.run("check IN_OF_OUT " + fx.path("square.json") + " " + fx.path("rect12.json") +
               " --l0 -0.2 --l1 0.7") == 0);
  CHECK(fx.run("check MINIMIZER " + fx.path("square.json") + " " + fx.path("e8.json") +
               " --omega axes", "min.json") == 0);
}

TEST_CASE("diagnose reports the four-way equivalence") {
  CliFixture fx;
  CHECK(fx.run("--format json diagnose " + fx.path("square.json") + " " + fx.path("diamond.json") +
               " --l0 -0.4 --l1 -0.1", "diag.json") == 0);
  auto j = nlohmann::json::parse(fx.slurp("diag.json"));
  CHECK(j["agree"].get<bool>());
  CHECK(j["conditions"]["ii_homothetic"].get<bool>());
  CHECK(j["homothety"]["scale"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("a violated law exits 1 with a json report on stdout") {
  CliFixture fx;
  // an absurd tolerance forces the residual over the line
  int rc = fx.run("check DVOL_EQ_SURFACE " + fx.path("square.json") + " " + fx.path("diamond.json") +
                  " --lambda 0.5 --tol 1e-18", "violation.json");
  CHECK(rc == 1);
  auto j = nlohmann::json::parse(fx.slurp("violation.json"));
  CHECK_FALSE(j["pass"].get<bool>());
  CHECK(j["law"].get<std::string>() == "DVOL_EQ_SURFACE");
  CHECK(j.contains("max_residual"));
}

TEST_CASE("usage and input errors exit 2") {
  CliFixture fx;
  CHECK(fx.run("info " + fx.path("missing.json")) == 2);
  CHECK(fx.run("nonsense") == 2);
  CHECK(fx.run("check NOT_A_LAW " + fx.path("square.json") + " " + fx.path("diamond.json")) == 2);
  // malformed body file
  std::ofstream bad(fx.path("bad.json"));
  bad << "{\"dim\": 2}";
  bad.close();
  CHECK(fx.run("info " + fx.path("bad.json")) == 2);
}
