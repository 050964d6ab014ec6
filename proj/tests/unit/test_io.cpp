#include "doctest.h"
#include "helpers.hpp"
#include "koszul/io.hpp"

using namespace koszul;
using testing::error_code;

TEST_CASE("algebra JSON round trip") {
  for (const auto& name : testing::small_builtins()) {
    const LieAlgebra g = testing::algebra(name);
    const io::json j = io::algebra_to_json(g);
    const LieAlgebra back = io::algebra_from_json(io::parse_json(j.dump(), "roundtrip"));
    CHECK(back.table() == g.table());
    CHECK(back.basis_names() == g.basis_names());
  }
}

TEST_CASE("algebra files use string rationals and i < j") {
  const io::json j = io::algebra_to_json(testing::algebra("gl:2"));
  CHECK(j["dim"] == 4);
  for (const auto& e : j["brackets"]) {
    CHECK(e[0].get<int>() < e[1].get<int>());
    CHECK(e[3].is_string());
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    io::parse_json("{\"dim\": 2,, }", "broken.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
    CHECK(std::string(e.what()).find("byte 11") != std::string::npos);
  }
  CHECK(error_code([] { io::algebra_from_json(io::json{{"dim", 2}}); }) == "ParseError");
  CHECK(error_code([] { io::algebra_from_json(io::json::parse(R"({"dim": 2, "brackets": [[0, 1, 0, 0.5]]})")); }) == "ParseError");
  CHECK(error_code([] { io::read_file("/nonexistent/algebra.json"); }) == "IoError");
}

TEST_CASE("forms round trip") {
  Form f(4, 2);
  f.add_term(MultiIndex({0, 3}), Scalar(-2, 3));
  f.add_term(MultiIndex({1, 2}), Scalar(5));
  const io::json j = io::form_to_json(f);
  CHECK(j.dump() == R"({"degree":2,"terms":[[[0,3],"-2/3"],[[1,2],"5"]]})");
  CHECK(io::form_from_json(j, 4) == f);
}

TEST_CASE("morphism files") {
  const PairMorphism m = io::morphism_from_json(io::json::parse(R"({
    "source": {"algebra": "gl:2", "sub": "zero"},
    "target": {"algebra": "gl:2", "sub": "so:2"},
    "matrix": "identity"})"));
  CHECK(m.map == Matrix::identity(4));
  CHECK(error_code([] {
          io::morphism_from_json(io::json::parse(R"({
            "source": {"algebra": "gl:2", "sub": "so:2"},
            "target": {"algebra": "gl:2", "sub": "zero"},
            "matrix": "identity"})"));
        }) == "SubalgebraNotPreserved");
}
