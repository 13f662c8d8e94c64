/**
 * @file test_fusion_basis.cpp
 * @brief Frozen enumeration expectations and counting cross-checks for the
 *        fusion-tree bases. dim_hom (an independent counting route) serves as
 *        the oracle for the enumerators throughout.
 */

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "loopbraid/builtin.hpp"
#include "loopbraid/fusion_basis.hpp"

using namespace loopbraid;

TEST_CASE("paired basis of the ising pair space, total charge 1, n = 2") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");
  const PairedBasis basis = enumerate_paired_basis(cat, sg, sg, one, 2);
  REQUIRE(basis.size() == 2);
  CHECK(basis.trees[0].a == std::vector<ObjId>{one, one});
  CHECK(basis.trees[0].b == std::vector<ObjId>{one, one});
  CHECK(basis.trees[1].a == std::vector<ObjId>{ps, ps});
  CHECK(basis.trees[1].b == std::vector<ObjId>{ps, one});
  CHECK(basis.find(paired_tree_key(basis.trees[1])) == 1);
}

TEST_CASE("paired basis edge cases at n = 1") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");
  CHECK(enumerate_paired_basis(cat, sg, sg, ps, 1).size() == 1);
  CHECK(enumerate_paired_basis(cat, sg, sg, one, 1).size() == 1);
  CHECK(enumerate_paired_basis(cat, sg, sg, sg, 1).size() == 0);
  CHECK_THROWS_AS(enumerate_paired_basis(cat, sg, sg, one, 0), UsageError);
}

TEST_CASE("paired basis order is lexicographic in (pair outcomes, running products)") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");
  const PairedBasis basis = enumerate_paired_basis(cat, sg, sg, ps, 3);
  REQUIRE(basis.size() == 4);  // 2^{n-1}
  CHECK(basis.trees[0].a == std::vector<ObjId>{one, one, ps});
  CHECK(basis.trees[0].b == std::vector<ObjId>{one, one, ps});
  CHECK(basis.trees[1].a == std::vector<ObjId>{one, ps, one});
  CHECK(basis.trees[1].b == std::vector<ObjId>{one, ps, ps});
  CHECK(basis.trees[2].a == std::vector<ObjId>{ps, one, one});
  CHECK(basis.trees[2].b == std::vector<ObjId>{ps, ps, ps});
  CHECK(basis.trees[3].a == std::vector<ObjId>{ps, ps, ps});
  CHECK(basis.trees[3].b == std::vector<ObjId>{ps, one, ps});
}

TEST_CASE("tambara-yamagami pair space with target m is empty") {
  const RibbonCategory cat = tambara_yamagami(TYParams{.k = 2});
  const ObjId m = *cat.find_object("m");
  CHECK(enumerate_paired_basis(cat, m, m, m, 2).size() == 0);
  CHECK(dim_hom(cat, alternating_leaves(m, m, 2), m) == 0);
}

TEST_CASE("left-nested basis frozen expectations") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");

  const LeftBasis four = enumerate_left_basis(cat, {sg, sg, sg, sg}, one);
  REQUIRE(four.size() == 2);
  CHECK(four.trees[0].prefix == std::vector<ObjId>{sg, one, sg, one});
  CHECK(four.trees[1].prefix == std::vector<ObjId>{sg, ps, sg, one});

  CHECK(enumerate_left_basis(cat, {sg, sg}, sg).size() == 0);
  CHECK(enumerate_left_basis(cat, {sg}, sg).size() == 1);
  CHECK(enumerate_left_basis(cat, {sg}, one).size() == 0);
  CHECK_THROWS_AS(enumerate_left_basis(cat, {}, one), UsageError);
}

TEST_CASE("dimension formula for the ising pair spaces") {
  const RibbonCategory cat = ising();
  const ObjId one = cat.unit(), sg = *cat.find_object("sigma"), ps = *cat.find_object("psi");
  std::uint64_t expect = 1;
  for (int n = 1; n <= 6; ++n) {
    CHECK(dim_hom(cat, alternating_leaves(sg, sg, n), one) == expect);
    CHECK(dim_hom(cat, alternating_leaves(sg, sg, n), ps) == expect);
    expect *= 2;
  }
  CHECK(dim_hom(cat, {sg, sg, sg, sg, sg, sg}, one) == 4);
  CHECK(dim_hom(cat, {sg, sg}, sg) == 0);
}

TEST_CASE("dimension formula for tambara-yamagami pair spaces") {
  for (int k = 1; k <= 2; ++k) {
    const RibbonCategory cat = tambara_yamagami(TYParams{.k = k});
    const ObjId m = *cat.find_object("m");
    const std::uint64_t g = 1ull << k;
    for (int n = 1; n <= 3; ++n) {
      std::uint64_t expect = 1;
      for (int i = 1; i < n; ++i) expect *= g;
      for (ObjId z = 0; z < static_cast<ObjId>(g); ++z)
        CHECK(dim_hom(cat, alternating_leaves(m, m, n), z) == expect);
    }
  }
}

TEST_CASE("enumeration size always equals dim_hom") {
  std::mt19937 rng(20240817u);
  const std::vector<RibbonCategory> cats = {trivial(), ising(), tambara_yamagami(TYParams{.k = 2})};
  for (const RibbonCategory& cat : cats) {
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<ObjId> obj_dist(0, cat.num_objects() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<ObjId> leaves;
      const int m = len_dist(rng);
      for (int i = 0; i < m; ++i) leaves.push_back(obj_dist(rng));
      for (ObjId z = 0; z < cat.num_objects(); ++z) {
        CAPTURE(cat.name(), leaves, z);
        CHECK(enumerate_left_basis(cat, leaves, z).size() == dim_hom(cat, leaves, z));
      }
    }
  }
}

TEST_CASE("paired and strand-level bases have matching dimensions") {
  const std::vector<RibbonCategory> cats = {ising(), tambara_yamagami(TYParams{.k = 2})};
  for (const RibbonCategory& cat : cats)
    for (ObjId x = 0; x < cat.num_objects(); ++x)
      for (ObjId y = 0; y < cat.num_objects(); ++y)
        for (ObjId z = 0; z < cat.num_objects(); ++z)
          for (int n = 1; n <= 3; ++n) {
            CAPTURE(cat.name(), x, y, z, n);
            CHECK(enumerate_paired_basis(cat, x, y, z, n).size() ==
                  dim_hom(cat, alternating_leaves(x, y, n), z));
          }
}

TEST_CASE("enumeration is deterministic") {
  const RibbonCategory cat = ising();
  const ObjId sg = *cat.find_object("sigma");
  const PairedBasis b1 = enumerate_paired_basis(cat, sg, sg, cat.unit(), 4);
  const PairedBasis b2 = enumerate_paired_basis(cat, sg, sg, cat.unit(), 4);
  REQUIRE(b1.size() == b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i) {
    CHECK(b1.trees[i].a == b2.trees[i].a);
    CHECK(b1.trees[i].b == b2.trees[i].b);
  }
}
