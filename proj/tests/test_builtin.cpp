/**
 * @file test_builtin.cpp
 * @brief Frozen expectations for the built-in categories: fusion tables,
 *        symbol values, twists, and the Tambara-Yamagami parameter space.
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "loopbraid/builtin.hpp"

using namespace loopbraid;

namespace {
constexpr double kPi = std::numbers::pi;

void check_complex(Complex got, Complex expect, double tol = 1e-12) {
  CAPTURE(got, expect);
  CHECK(std::abs(got - expect) < tol);
}
}  // namespace

TEST_CASE("ising fusion rules are the expected table") {
  const RibbonCategory cat = ising();
  REQUIRE(cat.num_objects() == 3);
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");
  const FusionRules& ru = cat.rules();
  CHECK(ru.triples().size() == 10);
  CHECK(ru.admissible(sg, sg, one));
  CHECK(ru.admissible(sg, sg, ps));
  CHECK_FALSE(ru.admissible(sg, sg, sg));
  CHECK(ru.admissible(sg, ps, sg));
  CHECK(ru.admissible(ps, sg, sg));
  CHECK(ru.admissible(ps, ps, one));
  CHECK_FALSE(ru.admissible(ps, ps, ps));
  for (const auto& o : cat.objects()) CHECK(cat.dual(o.id) == o.id);
}

TEST_CASE("ising twists and key symbols match the closed-form data") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");

  check_complex(cat.twist(one), 1.0);
  check_complex(cat.twist(sg), std::polar(1.0, kPi / 8));  // e^{2 pi i / 16}
  check_complex(cat.twist(ps), -1.0);

  const double s = 1.0 / std::sqrt(2.0);
  check_complex(cat.f_sym(sg, sg, sg, sg, one, one), s);
  check_complex(cat.f_sym(sg, sg, sg, sg, one, ps), s);
  check_complex(cat.f_sym(sg, sg, sg, sg, ps, one), s);
  check_complex(cat.f_sym(sg, sg, sg, sg, ps, ps), -s);
  check_complex(cat.f_sym(ps, sg, ps, sg, sg, sg), -1.0);
  check_complex(cat.f_sym(sg, ps, sg, ps, sg, sg), -1.0);
  check_complex(cat.f_sym(ps, ps, ps, ps, one, one), 1.0);
  check_complex(cat.f_sym(one, sg, sg, one, sg, one), 1.0);  // unit leg

  check_complex(cat.r_sym(sg, sg, one), std::polar(1.0, -kPi / 8));
  check_complex(cat.r_sym(sg, sg, ps), std::polar(1.0, 3 * kPi / 8));
  check_complex(cat.r_sym(ps, ps, one), -1.0);
  check_complex(cat.r_sym(sg, ps, sg), Complex(0.0, -1.0));
  check_complex(cat.r_sym(ps, sg, sg), Complex(0.0, -1.0));
  check_complex(cat.r_sym(one, sg, sg), 1.0);

  // Inverse F-block of the sigma^3 -> sigma block equals the block itself
  // (the (1/sqrt2) {{1,1},{1,-1}} matrix is its own inverse).
  check_complex(cat.fbar_sym(sg, sg, sg, sg, one, one), 1.0 / std::sqrt(2.0));
  check_complex(cat.fbar_sym(sg, sg, sg, sg, ps, ps), -1.0 / std::sqrt(2.0));
}

TEST_CASE("tambara-yamagami at k = 1 reproduces the ising data") {
  const RibbonCategory ty = tambara_yamagami(TYParams{});
  const RibbonCategory is = ising();
  REQUIRE(ty.num_objects() == 3);
  CHECK(ty.name_of(0) == "0");
  CHECK(ty.name_of(1) == "1");
  CHECK(ty.name_of(2) == "m");

  // Object correspondence: 0 -> 1, 1 -> psi, m -> sigma.
  const std::vector<ObjId> map = {*is.find_object("1"), *is.find_object("psi"),
                                  *is.find_object("sigma")};

  for (const auto& t : ty.rules().triples())
    CHECK(is.rules().admissible(map[static_cast<std::size_t>(t[0])],
                                map[static_cast<std::size_t>(t[1])],
                                map[static_cast<std::size_t>(t[2])]));
  CHECK(ty.rules().triples().size() == is.rules().triples().size());

  for (const auto& [k, v] : ty.f_table().entries()) {
    const Complex expect =
        is.f_sym(map[static_cast<std::size_t>(k[0])], map[static_cast<std::size_t>(k[1])],
                 map[static_cast<std::size_t>(k[2])], map[static_cast<std::size_t>(k[3])],
                 map[static_cast<std::size_t>(k[4])], map[static_cast<std::size_t>(k[5])]);
    check_complex(v, expect);
  }
  for (const auto& [k, v] : ty.r_table().entries()) {
    const Complex expect =
        is.r_sym(map[static_cast<std::size_t>(k[0])], map[static_cast<std::size_t>(k[1])],
                 map[static_cast<std::size_t>(k[2])]);
    check_complex(v, expect);
  }
  for (ObjId a = 0; a < 3; ++a)
    check_complex(ty.twist(a), is.twist(map[static_cast<std::size_t>(a)]));
}

TEST_CASE("tambara-yamagami k = 2 with the default bicharacter") {
  const RibbonCategory cat = tambara_yamagami(TYParams{.k = 2});
  REQUIRE(cat.num_objects() == 5);
  CHECK(cat.name_of(0) == "00");
  CHECK(cat.name_of(1) == "01");
  CHECK(cat.name_of(2) == "10");
  CHECK(cat.name_of(3) == "11");
  CHECK(cat.name_of(4) == "m");

  // Twists of the group sector: chi(g, g) with the identity Gram matrix.
  check_complex(cat.twist(0), 1.0);
  check_complex(cat.twist(1), -1.0);
  check_complex(cat.twist(2), -1.0);
  check_complex(cat.twist(3), 1.0);
  // Gauss sum (1 - i - i - 1) = -2i gives w0^2 = -i, so theta_m = e^{i pi/4}.
  check_complex(cat.twist(4), std::polar(1.0, kPi / 4));

  CHECK(classify_boson_fermion(cat, 0) == ParticleClass::boson);
  CHECK(classify_boson_fermion(cat, 1) == ParticleClass::fermion);
  CHECK(classify_boson_fermion(cat, 2) == ParticleClass::fermion);
  CHECK(classify_boson_fermion(cat, 3) == ParticleClass::boson);
  CHECK(classify_boson_fermion(cat, 4) == ParticleClass::neither);

  CHECK(quantum_dimension(cat, 4) == Catch::Approx(2.0).margin(1e-9));
  CHECK(quantum_dimension(cat, 3) == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("tambara-yamagami k = 3 certifies") {
  const RibbonCategory cat = tambara_yamagami(TYParams{.k = 3});
  CHECK(cat.num_objects() == 9);
  CHECK(quantum_dimension(cat, 8) == Catch::Approx(std::sqrt(8.0)).margin(1e-9));
}

TEST_CASE("tambara-yamagami alternative parameter choices still certify") {
  SECTION("negative m-block sign") {
    const RibbonCategory cat = tambara_yamagami(TYParams{.k = 1, .sign = -1});
    CHECK(cat.num_objects() == 3);
  }
  SECTION("conjugate quadratic refinement at k = 1 flips the m twist") {
    const RibbonCategory cat = tambara_yamagami(TYParams{.k = 1, .refinement_signs = {+1}});
    check_complex(cat.twist(2), std::polar(1.0, -kPi / 8));
  }
  SECTION("other square-root branch at k = 1 negates the m twist") {
    const RibbonCategory cat = tambara_yamagami(TYParams{.k = 1, .root_branch = -1});
    check_complex(cat.twist(2), -std::polar(1.0, kPi / 8));
  }
  SECTION("hyperbolic bicharacter at k = 2") {
    const RibbonCategory cat = tambara_yamagami(TYParams{.k = 2, .bicharacter_rows = {2u, 1u}});
    // chi(g, g) = +1 for every g: the whole group sector is bosonic.
    for (ObjId g = 0; g < 4; ++g) CHECK(classify_boson_fermion(cat, g) == ParticleClass::boson);
  }
}

TEST_CASE("tambara-yamagami rejects invalid parameters") {
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 0}), UsageError);
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 4}), UsageError);
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 2, .bicharacter_rows = {1u, 0u}}),
                  UsageError);  // degenerate
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 2, .bicharacter_rows = {3u, 0u}}),
                  UsageError);  // asymmetric
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 1, .sign = 0}), UsageError);
  CHECK_THROWS_AS(tambara_yamagami(TYParams{.k = 1, .refinement_signs = {2}}), UsageError);
}
