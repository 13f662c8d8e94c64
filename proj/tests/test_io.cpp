#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "loopbraid/builtin.hpp"
#include "loopbraid/io.hpp"
#include "loopbraid/loop_rep.hpp"

using namespace loopbraid;

namespace {

/// Largest absolute entry difference between two equally shaped matrices.
double max_diff(const Mat& a, const Mat& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
  return m;
}

/// A minimal one-object category file, with hooks to corrupt individual parts.
std::string minimal_file(const std::string& fusion = "[[0, 0, 0]]",
                         const std::string& twists = "[{\"a\": 0, \"value\": [1,0]}]",
                         const std::string& f_symbols = "[]",
                         const std::string& r_symbols = "[]") {
  return std::string("{\"format\": \"loopbraid-category-v1\", \"name\": \"tiny\", "
                     "\"objects\": [\"1\"], \"unit\": 0, \"dual\": [0], ") +
         "\"fusion\": " + fusion + ", \"f_symbols\": " + f_symbols +
         ", \"r_symbols\": " + r_symbols + ", \"twists\": " + twists + "}";
}

}  // namespace

TEST_CASE("save/load round-trips every builtin bit-exactly") {
  std::vector<RibbonCategory> cats;
  cats.push_back(trivial());
  cats.push_back(ising());
  cats.push_back(tambara_yamagami({.k = 1}));
  cats.push_back(tambara_yamagami({.k = 2}));
  for (const RibbonCategory& cat : cats) {
    INFO("category " << cat.name());
    const std::string text1 = save_category(cat);
    const RibbonCategory back = load_category(text1, cat.name());
    const std::string text2 = save_category(back);
    CHECK(text1 == text2);  // canonical form is a fixed point

    CHECK(back.name() == cat.name());
    CHECK(back.num_objects() == cat.num_objects());
    CHECK(back.unit() == cat.unit());
    for (ObjId a = 0; a < cat.num_objects(); ++a) {
      CHECK(back.name_of(a) == cat.name_of(a));
      CHECK(back.dual(a) == cat.dual(a));
      // bit-exact: twists compare equal as doubles, not merely within tolerance
      CHECK(back.twist(a) == cat.twist(a));
    }
    CHECK(back.rules().triples() == cat.rules().triples());
    CHECK(back.f_table().entries() == cat.f_table().entries());
    CHECK(back.r_table().entries() == cat.r_table().entries());
  }
}

TEST_CASE("unit-leg symbols are omitted from files and refilled on load") {
  const RibbonCategory cat = ising();
  const std::string text = save_category(cat);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["format"] == "loopbraid-category-v1");
  // Only the gauge-fixed unit-leg entries are implied; everything else is
  // written out. Ising has 14 admissible F-tuples and 5 fusion triples with
  // both factors non-unit.
  CHECK(j["f_symbols"].size() == 14);
  CHECK(j["r_symbols"].size() == 5);
  CHECK(j["twists"].size() == 3);
  for (const auto& rec : j["f_symbols"]) {
    CHECK(rec["a"] != 0);
    CHECK(rec["b"] != 0);
    CHECK(rec["c"] != 0);
  }

  // Loading restores the omitted entries as exact 1s.
  const RibbonCategory back = load_category(text);
  const auto sigma = back.find_object("sigma");
  REQUIRE(sigma.has_value());
  CHECK(back.f_sym(back.unit(), *sigma, *sigma, back.unit(), *sigma, back.unit()) == Complex{1.0});
  CHECK(back.r_sym(back.unit(), *sigma, *sigma) == Complex{1.0});
  CHECK(back.f_table().entries().size() == cat.f_table().entries().size());
}

TEST_CASE("non-gauge-fixed unit-leg values survive a save/load cycle") {
  // A file may legitimately carry unit-leg entries with value != 1 (for
  // example data in a different gauge that validation will then flag);
  // saving must preserve them rather than silently dropping the record.
  const std::string text = minimal_file(
      "[[0, 0, 0]]", "[{\"a\": 0, \"value\": [1,0]}]",
      "[{\"a\": 0, \"b\": 0, \"c\": 0, \"d\": 0, \"e\": 0, \"f\": 0, \"value\": [2,0]}]");
  const RibbonCategory cat = load_category(text);
  CHECK(cat.f_sym(0, 0, 0, 0, 0, 0) == Complex{2.0});
  CHECK(!validate_structure(cat).ok());  // unit-leg F must be 1 in the fixed gauge
  const nlohmann::json j = nlohmann::json::parse(save_category(cat));
  REQUIRE(j["f_symbols"].size() == 1);
  CHECK(j["f_symbols"][0]["value"][0] == 2.0);
}

TEST_CASE("awkward floating-point values round-trip exactly") {
  RibbonCategory cat = ising();
  // Drive the emitter through a value with no short decimal form.
  FSymbolTable f = cat.f_table();
  const Complex ugly{1.0 / 3.0, -7.0 / 11.0};
  f.set({1, 1, 1, 1, 0, 0}, ugly);
  std::vector<Complex> twists;
  for (ObjId a = 0; a < cat.num_objects(); ++a) twists.push_back(cat.twist(a));
  std::vector<ObjId> dual;
  for (ObjId a = 0; a < cat.num_objects(); ++a) dual.push_back(cat.dual(a));
  std::vector<std::string> names;
  for (ObjId a = 0; a < cat.num_objects(); ++a) names.push_back(cat.name_of(a));
  const RibbonCategory tweaked =
      RibbonCategory::assemble(cat.name(), names, cat.unit(), dual, cat.rules().triples(),
                               std::move(f), cat.r_table(), twists);
  const RibbonCategory back = load_category(save_category(tweaked));
  CHECK(back.f_sym(1, 1, 1, 1, 0, 0) == ugly);
}

TEST_CASE("file round-trip through disk") {
  const std::string path = "test_io_roundtrip.json";
  const RibbonCategory cat = tambara_yamagami({.k = 2});
  save_category_file(cat, path);
  const RibbonCategory back = load_category_file(path);
  CHECK(save_category(back) == save_category(cat));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_category_file("no_such_directory/missing.json"), UsageError);
  CHECK_THROWS_AS(save_category_file(cat, "no_such_directory/out.json"), UsageError);
}

TEST_CASE("loaded categories certify and reproduce the builtin representation") {
  const RibbonCategory cat = ising();
  const RibbonCategory back = load_category(save_category(cat));
  CHECK(validate_structure(back).ok());
  CHECK(back.inverse_block_issues().empty());
  CHECK(verify_pentagon(back).pass());
  CHECK(verify_hexagon(back).pass());

  const auto sigma = back.find_object("sigma");
  const auto psi = back.find_object("psi");
  REQUIRE(sigma.has_value());
  REQUIRE(psi.has_value());
  const LBRep a = build_lb_representation(cat, *sigma, *sigma, *psi, 3);
  const LBRep b = build_lb_representation(back, *sigma, *sigma, *psi, 3);
  REQUIRE(a.sigma.size() == b.sigma.size());
  for (std::size_t i = 0; i < a.sigma.size(); ++i) {
    CHECK(max_diff(a.sigma[i], b.sigma[i]) == 0.0);  // same bits in, same bits out
    CHECK(max_diff(a.s[i], b.s[i]) == 0.0);
  }
}

TEST_CASE("malformed input is rejected with the right error type") {
  SECTION("syntactically invalid JSON is a usage error") {
    CHECK_THROWS_AS(load_category("{\"format\": "), UsageError);
    CHECK_THROWS_AS(load_category(""), UsageError);
  }
  SECTION("wrong or missing format marker") {
    CHECK_THROWS_WITH(load_category("{\"format\": \"other-v9\"}"),
                      Catch::Matchers::ContainsSubstring("unsupported format"));
    CHECK_THROWS_AS(load_category("{}"), DataError);
    CHECK_THROWS_AS(load_category("[1, 2]"), DataError);
  }
  SECTION("duplicate fusion triple is rejected as a multiplicity") {
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 0], [0, 0, 0]]")),
                      Catch::Matchers::ContainsSubstring("multiplicity-free"));
  }
  SECTION("duplicate symbol and twist records") {
    const std::string f2 =
        "[{\"a\": 0, \"b\": 0, \"c\": 0, \"d\": 0, \"e\": 0, \"f\": 0, \"value\": [1,0]},"
        " {\"a\": 0, \"b\": 0, \"c\": 0, \"d\": 0, \"e\": 0, \"f\": 0, \"value\": [2,0]}]";
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 0]]",
                                                 "[{\"a\": 0, \"value\": [1,0]}]", f2)),
                      Catch::Matchers::ContainsSubstring("duplicate F-symbol"));
    const std::string r2 = "[{\"a\": 0, \"b\": 0, \"c\": 0, \"value\": [1,0]},"
                           " {\"a\": 0, \"b\": 0, \"c\": 0, \"value\": [1,0]}]";
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 0]]",
                                                 "[{\"a\": 0, \"value\": [1,0]}]", "[]", r2)),
                      Catch::Matchers::ContainsSubstring("duplicate R-symbol"));
    CHECK_THROWS_WITH(
        load_category(minimal_file("[[0, 0, 0]]",
                                   "[{\"a\": 0, \"value\": [1,0]}, {\"a\": 0, \"value\": [1,0]}]")),
        Catch::Matchers::ContainsSubstring("duplicate twist"));
  }
  SECTION("missing twists are required, not defaulted") {
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 0]]", "[]")),
                      Catch::Matchers::ContainsSubstring("missing twist"));
  }
  SECTION("object ids must be in range") {
    CHECK_THROWS_AS(load_category(minimal_file("[[0, 0, 7]]")), DataError);
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 7]]")),
                      Catch::Matchers::ContainsSubstring("outside 0..0"));
    const std::string bad_r = "[{\"a\": 0, \"b\": 3, \"c\": 0, \"value\": [1,0]}]";
    CHECK_THROWS_AS(load_category(minimal_file("[[0, 0, 0]]", "[{\"a\": 0, \"value\": [1,0]}]",
                                               "[]", bad_r)),
                    DataError);
    // unit / dual out of range
    CHECK_THROWS_AS(
        load_category("{\"format\": \"loopbraid-category-v1\", \"objects\": [\"1\"], "
                      "\"unit\": 1, \"dual\": [0], \"fusion\": [], \"f_symbols\": [], "
                      "\"r_symbols\": [], \"twists\": [{\"a\": 0, \"value\": [1,0]}]}"),
        DataError);
    CHECK_THROWS_AS(
        load_category("{\"format\": \"loopbraid-category-v1\", \"objects\": [\"1\"], "
                      "\"unit\": 0, \"dual\": [0, 0], \"fusion\": [], \"f_symbols\": [], "
                      "\"r_symbols\": [], \"twists\": [{\"a\": 0, \"value\": [1,0]}]}"),
        DataError);
  }
  SECTION("values must be [re, im] pairs") {
    CHECK_THROWS_WITH(load_category(minimal_file("[[0, 0, 0]]", "[{\"a\": 0, \"value\": [1]}]")),
                      Catch::Matchers::ContainsSubstring("two-element"));
    CHECK_THROWS_AS(
        load_category(minimal_file("[[0, 0, 0]]", "[{\"a\": 0, \"value\": \"1\"}]")),
        DataError);
  }
  SECTION("objects array must be non-empty strings") {
    CHECK_THROWS_AS(
        load_category("{\"format\": \"loopbraid-category-v1\", \"objects\": [], \"unit\": 0, "
                      "\"dual\": [], \"fusion\": [], \"f_symbols\": [], \"r_symbols\": [], "
                      "\"twists\": []}"),
        DataError);
  }
}
