#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "orbilef/error.hpp"
#include "orbilef/scene.hpp"
#include "orbilef/summary.hpp"

using namespace orbilef;

namespace {

std::string scene_path(const std::string& name) {
  return std::string(ORBILEF_SCENES) + "/" + name + ".json";
}

Error error_of(const std::string& text) {
  try {
    parse_scene(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorCode::Internal, "no error");
}

const std::string kBase = R"({
  "name": "t", "mode": "geometric", "dimension": 1,
  "generators": [{"label": "u", "matrix": [[-1]], "translation": [0]},
                 {"label": "w", "matrix": [[1]], "translation": [1]}],
  "fundamental_domain": {"min": [0], "max": [0.5]},
  "enumeration_radius": 4,
  "phi": {"affine": {"matrix": [[-1]], "translation": [-0.5]}},
  "zeta": {"u": "uw", "w": "w^-1"}
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

} // namespace

TEST_CASE("shipped dihedral example 1") {
  auto s = load_scene(scene_path("dihedral_ex1"));
  REQUIRE(s.generators.size() == 2);
  CHECK(s.generators[0].label == "u");
  CHECK(s.generators[1].label == "w");
  const auto& phi = std::get<AffineMap>(s.phi);
  CHECK(phi.linear(0, 0) == -1);
  CHECK(phi.translation[0] == -0.5);
  CHECK(s.zeta == std::map<std::string, std::string>{{"u", "uw"}, {"w", "w^-1"}});
}

TEST_CASE("validation errors name their field") {
  auto e = error_of(with(kBase, R"("matrix": [[1]], "translation": [1])",
                         R"("matrix": [[2]], "translation": [1])"));
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(std::string(e.what()).find("'w'") != std::string::npos);

  e = error_of(with(kBase, R"("w": "w^-1")", R"("w": "x^-1")"));
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(std::string(e.what()).find("zeta.w") != std::string::npos);

  e = error_of(with(kBase, R"("enumeration_radius": 4)", R"("enumeration_radius": -4)"));
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(std::string(e.what()).find("enumeration_radius") != std::string::npos);

  e = error_of(with(kBase, R"("dimension": 1)", R"("dimension": 1, "dimensoin": 2)"));
  CHECK(e.code() == ErrorCode::ValidationError);

  e = error_of(with(kBase, R"("zeta": {"u": "uw", "w": "w^-1"})", R"("zeta": {"u": "uw"})"));
  CHECK(e.code() == ErrorCode::ValidationError);

  e = error_of(with(kBase, R"("min": [0])", R"("min": [0, 1])"));
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(std::string(e.what()).find("fundamental_domain.min") != std::string::npos);

  e = error_of(with(kBase, R"({"affine": {"matrix": [[-1]], "translation": [-0.5]}})",
                    R"({"piecewise1d": {"knots": [{"x": 0, "value": 0, "derivative": 1},
                        {"x": 0.5, "value": 0.5, "derivative": 1}], "extension": "periodic"}})"));
  CHECK(e.code() == ErrorCode::ValidationError);

  e = error_of(with(kBase, R"("mode": "geometric")", R"("mode": "other")"));
  CHECK(e.code() == ErrorCode::ValidationError);
}

TEST_CASE("syntax errors carry a position") {
  auto e = error_of("{\n  \"name\": \"x\",\n  \"dimension\": 1,,\n}");
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  CHECK(error_of("[1, 2]").code() == ErrorCode::ParseError);
}

TEST_CASE("comments and tolerance overrides") {
  auto text = with(kBase, R"("enumeration_radius": 4)",
                   "\"enumeration_radius\": 4, // finite ball\n"
                   R"("tolerances": {"dedup": 1e-6, "bisection_grid": 128})");
  auto s = parse_scene(text);
  CHECK(s.tolerances.dedup == 1e-6);
  CHECK(s.tolerances.bisection_grid == 128);
  CHECK(s.tolerances.point == GeometricTolerances{}.point);
  CHECK(error_of(with(kBase, R"("enumeration_radius": 4)",
                      R"("enumeration_radius": 4, "tolerances": {"pointt": 1})"))
            .code() == ErrorCode::ValidationError);
}

TEST_CASE("missing files") {
  bool threw = false;
  try {
    load_scene("/nonexistent/scene.json");
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::IoError;
  }
  CHECK(threw);
}

TEST_CASE("finite-group scenes") {
  auto s = load_scene(scene_path("S3_inner"));
  CHECK(s.is_finite());
  CHECK(s.group_name == "S3");
  auto g = build_group(s);
  CHECK(g->order() == 6);
  CHECK(build_zeta(s, g)(*g->generator("r")) == *g->generator("r"));

  auto p = load_scene(scene_path("S3_perm_inner"));
  CHECK(p.degree == 3);
  CHECK(build_group(p)->order() == 6);

  auto id = parse_scene(R"({"name": "x", "mode": "finite-group", "group": {"named": "Q8"}, "zeta": "id"})");
  CHECK(id.zeta == std::map<std::string, std::string>{{"i", "i"}, {"j", "j"}});

  CHECK(error_of(R"({"name": "x", "mode": "finite-group", "group": {"named": "S3"},
                    "zeta": {"s": "r", "r": "q"}})").code() == ErrorCode::ValidationError);
}

TEST_CASE("every shipped scene round-trips and runs deterministically") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ORBILEF_SCENES)) {
    if (entry.path().extension() != ".json")
      continue;
    CAPTURE(entry.path().string());
    auto s = load_scene(entry.path().string());
    CHECK(parse_scene(render_scene(s)) == s);
    CHECK(render_scene(parse_scene(render_scene(s))) == render_scene(s));
    auto a = lefschetz_summary(s, 20250101), b = lefschetz_summary(s, 20250101);
    CHECK(a.data.dump(2) == b.data.dump(2));
    CHECK(a.headline.is_integer());
    ++count;
  }
  CHECK(count >= 10);
}
