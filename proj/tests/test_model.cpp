#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sasver/fixtures.hpp"
#include "sasver/model.hpp"

using namespace sasver;

namespace {

std::string error_of(const std::string& text) {
  try {
    load_model(text, "m");
  } catch (const ModelError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("a complete model round trips") {
  const char* text =
      "# comment line\n"
      "[source]\n"
      "vars = x y z   # inline comment\n"
      "g[1][1] = 1 + y^2\n"
      "g[2][2] = 1\n"
      "g[3][3] = 2\n"
      "g[1][2] = y/2\n"
      "[target]\n"
      "vars = u\n"
      "g[1][1] = 1\n"
      "[map]\n"
      "F[1] = x + z\n"
      "guard = 1 - x^2\n"
      "guard = 2 - y^2\n"
      "[domain]\n"
      "box = -0.5 0.5\n"
      "[sample]\n"
      "points = 17\n"
      "seed = 1234\n";
  SubmersionSpec F = load_model(text, "m");
  CHECK(F.src_dim() == 3);
  CHECK(F.tgt_dim() == 1);
  CHECK(F.guards.size() == 2);
  CHECK(F.box_lo == -0.5);
  CHECK(F.box_hi == 0.5);
  CHECK(F.default_points == 17);
  CHECK(F.default_seed == 1234);
  CHECK(F.has_map());
  CHECK_FALSE(F.has_structure());

  Point p(3);
  p << 0.3, -0.2, 0.7;
  Eigen::MatrixXd G = metric_at(F.source.metric, p);
  CHECK(G(0, 0) == doctest::Approx(1.04));
  CHECK(G(0, 1) == doctest::Approx(-0.1));
  CHECK(G(1, 0) == doctest::Approx(-0.1));  // mirrored
  CHECK(G(0, 2) == 0.0);                    // unset entries are zero
  CHECK(evaluate_value(F.map[0], p) == doctest::Approx(1.0));
}

TEST_CASE("fixture texts parse to the documented dimensions") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    SubmersionSpec F = load_fixture(name);
    CHECK(F.name == name);
    CHECK(F.src_dim() >= 2);
  }
  CHECK(load_fixture("example1").src_dim() == 5);
  CHECK(load_fixture("example1-r7").src_dim() == 7);
  CHECK(load_fixture("example4").src_dim() == 7);
  CHECK(load_fixture("example4").tgt_dim() == 5);
  CHECK(load_fixture("example4").guards.size() == 3);
  CHECK(load_fixture("example2").has_structure());
  CHECK_FALSE(load_fixture("poly-r3-r2").has_structure());
  CHECK_FALSE(is_fixture("nonexistent"));
  CHECK_THROWS_AS(load_fixture("nonexistent"), ModelError);
}

TEST_CASE("conflicting symmetric entries are refused with line info") {
  std::string err = error_of(
      "[source]\n"
      "vars = x y\n"
      "g[1][2] = x\n"
      "g[2][1] = y\n");
  CHECK(err.find("m:4") != std::string::npos);
  CHECK(err.find("conflicts") != std::string::npos);

  // identical text on both triangles is fine
  const char* same =
      "[source]\n"
      "vars = x y\n"
      "g[1][1] = 1\n"
      "g[2][2] = 1\n"
      "g[1][2] = x\n"
      "g[2][1] = x\n";
  CHECK_NOTHROW(load_model(same, "m"));
}

TEST_CASE("parse errors carry the offending line") {
  CHECK(error_of("[source]\nvars = x\ng[1][1] = x +\n").find("m:3") !=
        std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = q\n").find("q") != std::string::npos);
  CHECK(error_of("[nonsense]\n").find("unknown section") != std::string::npos);
  CHECK(error_of("vars = x\n").find("before any section") != std::string::npos);
  CHECK(error_of("[source]\ng[1][1] = 1\n").find("vars") != std::string::npos);
  CHECK(error_of("[source]\nvars = x x\n").find("duplicate") != std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = 1\ng[2][2] = 1\n").find("out of range") !=
        std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = 1\n[map]\nF[1] = x\n")
            .find("together") != std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = 1\n[target]\nvars = u\n"
                 "g[1][1] = 1\n[map]\nguard = x\n")
            .find("F[1]") != std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = 1\n[domain]\nbox = 3 1\n")
            .find("below") != std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1][1] = 1\n[sample]\npoints = -2\n")
            .find("positive") != std::string::npos);
  CHECK(error_of("[source]\nvars = x\ng[1] = 1\n").find("indices") !=
        std::string::npos);
  CHECK(error_of("[source]\nvars = x\nnope = 1\n").find("unknown key") !=
        std::string::npos);
}

TEST_CASE("file loading reports missing files and succeeds on real ones") {
  CHECK_THROWS_AS(load_model_file("/nonexistent/path.model"), ModelError);

  std::string path = "roundtrip_model_test.tmp";
  {
    std::ofstream out(path);
    out << fixture_text("poly-r3-r2");
  }
  SubmersionSpec F = load_model_file(path);
  CHECK(F.src_dim() == 3);
  CHECK(F.name == path);
  std::remove(path.c_str());
}

}  // TEST_SUITE
