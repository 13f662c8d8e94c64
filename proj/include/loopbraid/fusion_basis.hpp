#pragma once
/**
 * @file fusion_basis.hpp
 * @brief Enumeration and indexing of fusion-tree bases.
 *
 * Two tree shapes are used. The paired shape underlies the loop-braid
 * representation on Hom(z, ((x y)(x y))...): n pairs, pair i fusing to a_i,
 * with running products b_1 = a_1, b_i in channels(b_{i-1}, a_i), b_n = z
 * (and b_0 = unit by convention). The left-nested shape is the workhorse for
 * the strand-level braid oracle: leaves w_1..w_m fused strictly left to
 * right, recorded as the prefix vector p_1 = w_1, p_j in channels(p_{j-1},
 * w_j), p_m = z.
 *
 * Canonical basis order is lexicographic in the free labels by object id:
 * (a_1..a_n, b_2..b_{n-1}) for paired trees, (p_2..p_{m-1}) for left trees.
 * Matrices elsewhere in the library index rows/columns by these positions.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "loopbraid/category.hpp"

namespace loopbraid {

/** One basis vector of Hom(z, ((x y))^n) in the paired tree shape. */
struct PairedFusionTree {
  ObjId x = 0, y = 0, z = 0;
  std::vector<ObjId> a;  ///< pair outcomes, size n
  std::vector<ObjId> b;  ///< running products, size n; b[0] = a[0], b[n-1] = z
};

/** One basis vector of Hom(z, w_1 x ... x w_m) in the left-nested shape. */
struct LeftFusionTree {
  std::vector<ObjId> leaves;  ///< w_1..w_m
  ObjId z = 0;
  std::vector<ObjId> prefix;  ///< p_1..p_m with p_1 = leaves[0], p_m = z
};

/** Free-label key identifying a paired tree within its basis. */
inline std::vector<ObjId> paired_tree_key(const PairedFusionTree& t) {
  std::vector<ObjId> key(t.a);
  for (std::size_t i = 1; i + 1 < t.b.size(); ++i) key.push_back(t.b[i]);
  return key;
}

/** Free-label key identifying a left tree within its basis. */
inline std::vector<ObjId> left_tree_key(const LeftFusionTree& t) {
  std::vector<ObjId> key;
  for (std::size_t i = 1; i + 1 < t.prefix.size(); ++i) key.push_back(t.prefix[i]);
  return key;
}

/** An ordered basis: trees in canonical order plus key -> position lookup. */
template <typename Tree>
struct BasisIndex {
  std::vector<Tree> trees;
  std::map<std::vector<ObjId>, std::size_t> position;

  std::size_t size() const { return trees.size(); }

  std::optional<std::size_t> find(const std::vector<ObjId>& key) const {
    auto it = position.find(key);
    if (it == position.end()) return std::nullopt;
    return it->second;
  }
};

using PairedBasis = BasisIndex<PairedFusionTree>;
using LeftBasis = BasisIndex<LeftFusionTree>;

/**
 * @brief Enumerate the paired basis of Hom(z, ((x y))^n) in canonical order.
 * @throws UsageError for n < 1.
 */
inline PairedBasis enumerate_paired_basis(const RibbonCategory& cat, ObjId x, ObjId y, ObjId z,
                                          int n) {
  if (n < 1) throw UsageError("enumerate_paired_basis: need n >= 1");
  const FusionRules& ru = cat.rules();
  PairedBasis basis;
  std::vector<ObjId> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      PairedFusionTree t{x, y, z, a, b};
      basis.trees.push_back(std::move(t));
      return;
    }
    for (ObjId ai : ru.channels(x, y)) {
      const ObjId prev = (i == 0) ? cat.unit() : b[static_cast<std::size_t>(i - 1)];
      for (ObjId bi : ru.channels(prev, ai)) {
        if (i == n - 1 && bi != z) continue;
        a[static_cast<std::size_t>(i)] = ai;
        b[static_cast<std::size_t>(i)] = bi;
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  std::sort(basis.trees.begin(), basis.trees.end(),
            [](const PairedFusionTree& s, const PairedFusionTree& t) {
              return paired_tree_key(s) < paired_tree_key(t);
            });
  for (std::size_t i = 0; i < basis.trees.size(); ++i)
    basis.position[paired_tree_key(basis.trees[i])] = i;
  return basis;
}

/**
 * @brief Enumerate the left-nested basis of Hom(z, w_1 x ... x w_m) in
 *        canonical order.
 * @throws UsageError for an empty leaf list.
 */
inline LeftBasis enumerate_left_basis(const RibbonCategory& cat, const std::vector<ObjId>& leaves,
                                      ObjId z) {
  if (leaves.empty()) throw UsageError("enumerate_left_basis: need at least one leaf");
  const FusionRules& ru = cat.rules();
  const int m = static_cast<int>(leaves.size());
  LeftBasis basis;
  std::vector<ObjId> prefix(static_cast<std::size_t>(m));
  prefix[0] = leaves[0];
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      LeftFusionTree t{leaves, z, prefix};
      basis.trees.push_back(std::move(t));
      return;
    }
    for (ObjId p : ru.channels(prefix[static_cast<std::size_t>(i - 1)],
                               leaves[static_cast<std::size_t>(i)])) {
      if (i == m - 1 && p != z) continue;
      prefix[static_cast<std::size_t>(i)] = p;
      self(self, i + 1);
    }
  };
  if (m == 1) {
    if (leaves[0] == z) basis.trees.push_back({leaves, z, prefix});
  } else {
    rec(rec, 1);
  }
  std::sort(basis.trees.begin(), basis.trees.end(),
            [](const LeftFusionTree& s, const LeftFusionTree& t) {
              return left_tree_key(s) < left_tree_key(t);
            });
  for (std::size_t i = 0; i < basis.trees.size(); ++i)
    basis.position[left_tree_key(basis.trees[i])] = i;
  return basis;
}

/**
 * @brief dim Hom(z, w_1 x ... x w_m) by iterated fusion-matrix products
 *        (counts trees without enumerating them).
 * @throws UsageError for an empty leaf list.
 */
inline std::uint64_t dim_hom(const RibbonCategory& cat, const std::vector<ObjId>& leaves, ObjId z) {
  if (leaves.empty()) throw UsageError("dim_hom: need at least one leaf");
  const FusionRules& ru = cat.rules();
  std::vector<std::uint64_t> v(static_cast<std::size_t>(ru.num_objects()), 0);
  v[static_cast<std::size_t>(leaves[0])] = 1;
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    std::vector<std::uint64_t> w(v.size(), 0);
    for (ObjId p = 0; p < ru.num_objects(); ++p) {
      if (v[static_cast<std::size_t>(p)] == 0) continue;
      for (ObjId c : ru.channels(p, leaves[i])) w[static_cast<std::size_t>(c)] += v[static_cast<std::size_t>(p)];
    }
    v = std::move(w);
  }
  return v[static_cast<std::size_t>(z)];
}

/** The flattened strand-level leaf list [x, y, x, y, ...] of n pairs. */
inline std::vector<ObjId> alternating_leaves(ObjId x, ObjId y, int n) {
  std::vector<ObjId> leaves;
  for (int i = 0; i < n; ++i) {
    leaves.push_back(x);
    leaves.push_back(y);
  }
  return leaves;
}

}  // namespace loopbraid
