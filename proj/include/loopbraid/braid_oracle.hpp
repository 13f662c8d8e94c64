#pragma once
/**
 * @file braid_oracle.hpp
 * @brief Independent strand-level oracle for the loop generators.
 *
 * The closed forms in loop_rep.hpp contract F/R/inverse-F data in one shot.
 * This module rebuilds the same operators the long way round: each generator
 * is a braid on 2n strands (two strands per loop), realized as a composition
 * of four elementary crossing matrices over the left-nested basis, conjugated
 * by an explicit F-move basis change to and from the paired basis. Agreement
 * between the two constructions (oracle_equivalence) certifies both.
 *
 * Crossing words, with p = 2i - 1 and tau_k the crossing of strands (k, k+1),
 * read off the defining strand diagrams in bottom-to-top (time) order:
 *
 *   generator | word                                      | picture
 *   ----------+-------------------------------------------+---------------------------
 *   s~_j      | tau-_{p+1} tau-_p tau-_{p+2} tau-_{p+1}   | pair j+1 passes over
 *             |                                           | pair j wholesale
 *   sigma~_i  | tau+_{p+1} tau+_p tau-_{p+2} tau-_{p+1}   | left strand of pair i+1
 *             |                                           | dives under pair i, right
 *             |                                           | strand passes over it
 *
 * A positive crossing tau+ means the initially-left strand passes over the
 * initially-right one; tau- is its inverse.
 */

#include <string>
#include <utility>
#include <vector>

#include "loopbraid/category.hpp"
#include "loopbraid/fusion_basis.hpp"
#include "loopbraid/loop_rep.hpp"
#include "loopbraid/matrix.hpp"

namespace loopbraid {

/** One crossing of strands (position, position + 1); sign +1 = left over right. */
struct ElementaryCrossing {
  int position = 1;  ///< 1 <= position <= 2n - 1
  int sign = +1;     ///< +1 or -1
};

/** Leaf sequence after the crossing at 1-based position k. */
inline std::vector<ObjId> swap_adjacent_leaves(std::vector<ObjId> leaves, int k) {
  std::swap(leaves[static_cast<std::size_t>(k - 1)], leaves[static_cast<std::size_t>(k)]);
  return leaves;
}

/**
 * @brief Matrix of the elementary crossing of leaves (k, k+1) on the
 *        left-nested basis of Hom(z, w_1 x ... x w_m).
 *
 * The output basis is the left-nested basis over the swapped leaf sequence.
 * Only the prefix entry at the crossing changes; its coefficient is the
 * F . R . inverse-F contraction at that node (with the implicit unit prefix
 * ahead of the first leaf, k = 1 reduces to a pure R phase).
 *
 * @throws UsageError for k out of range or sign not in {+1, -1}.
 */
inline Mat elementary_braid_matrix(const RibbonCategory& cat, const std::vector<ObjId>& leaves,
                                   ObjId z, int k, int sign) {
  const int m = static_cast<int>(leaves.size());
  if (k < 1 || k >= m) throw UsageError("elementary_braid_matrix: crossing position out of range");
  if (sign != 1 && sign != -1) throw UsageError("elementary_braid_matrix: sign must be +1 or -1");
  const LeftBasis in = enumerate_left_basis(cat, leaves, z);
  const LeftBasis out = enumerate_left_basis(cat, swap_adjacent_leaves(leaves, k), z);
  Mat mtx(out.size(), in.size());
  const FusionRules& ru = cat.rules();
  const std::size_t ka = static_cast<std::size_t>(k - 1);
  const ObjId u = leaves[ka], v = leaves[ka + 1];
  for (std::size_t col = 0; col < in.size(); ++col) {
    const LeftFusionTree& t = in.trees[col];
    const ObjId before = (ka == 0) ? cat.unit() : t.prefix[ka - 1];
    const ObjId at = t.prefix[ka];
    const ObjId after = t.prefix[ka + 1];
    for (ObjId atp : ru.channels(before, v)) {
      Complex coeff{};
      for (ObjId c : ru.channels(u, v)) {
        const Complex f1 = cat.f_sym(before, u, v, after, at, c);
        if (f1 == Complex{}) continue;
        const Complex fb = cat.fbar_sym(before, v, u, after, atp, c);
        if (fb == Complex{}) continue;
        const Complex r = (sign > 0) ? cat.r_sym(v, u, c) : cat.rbar_sym(u, v, c);
        coeff += f1 * r * fb;
      }
      std::vector<ObjId> prefix(t.prefix);
      prefix[ka] = atp;
      std::vector<ObjId> key;
      for (std::size_t i = 1; i + 1 < prefix.size(); ++i) key.push_back(prefix[i]);
      detail::accumulate(mtx, out, key, col, coeff);
    }
  }
  return mtx;
}

/**
 * @brief Basis change from the paired basis of Hom(z, ((x y))^n) to the
 *        left-nested basis over [x, y, x, y, ...].
 *
 * One inverse-F move per pair, applied bottom-up (pair 2 first): the
 * coefficient of left tree l in the expansion of paired tree t is
 *
 *   prod_{i=2..n} Fbar[b_{i-2}, x, y, b_{i-1}; l.prefix[2i-2], a_{i-1}]
 *
 * (0-based arrays) provided every odd prefix entry of l matches the running
 * product chain of t; otherwise zero.
 *
 * @throws Error if the two bases disagree in dimension (a bug by construction).
 */
inline Mat paired_to_left_change(const RibbonCategory& cat, ObjId x, ObjId y, ObjId z, int n) {
  const PairedBasis paired = enumerate_paired_basis(cat, x, y, z, n);
  const LeftBasis left = enumerate_left_basis(cat, alternating_leaves(x, y, n), z);
  if (paired.size() != left.size())
    throw Error("internal: paired and left-nested bases disagree in dimension");
  Mat c(left.size(), paired.size());
  for (std::size_t col = 0; col < paired.size(); ++col) {
    const PairedFusionTree& t = paired.trees[col];
    for (std::size_t row = 0; row < left.size(); ++row) {
      const LeftFusionTree& l = left.trees[row];
      bool compatible = true;
      for (int i = 1; i <= n && compatible; ++i)
        compatible = l.prefix[static_cast<std::size_t>(2 * i - 1)] ==
                     t.b[static_cast<std::size_t>(i - 1)];
      if (!compatible) continue;
      Complex prod{1.0};
      for (int i = 2; i <= n && prod != Complex{}; ++i)
        prod *= cat.fbar_sym(t.b[static_cast<std::size_t>(i - 2)], x, y,
                             t.b[static_cast<std::size_t>(i - 1)],
                             l.prefix[static_cast<std::size_t>(2 * i - 2)],
                             t.a[static_cast<std::size_t>(i - 1)]);
      c.at(row, col) = prod;
    }
  }
  return c;
}

/** The four-crossing word of one loop generator, in bottom-to-top order. */
inline std::vector<ElementaryCrossing> generator_crossing_word(GenRef g) {
  const int p = 2 * g.index - 1;
  if (g.is_sigma) return {{p + 1, +1}, {p, +1}, {p + 2, -1}, {p + 1, -1}};
  return {{p + 1, -1}, {p, -1}, {p + 2, -1}, {p + 1, -1}};
}

/**
 * @brief Oracle matrix of a loop generator over the paired basis: the
 *        composition of its four elementary crossings, conjugated by the
 *        paired-to-left basis change.
 * @throws UsageError for an index outside 1..n-1.
 */
inline Mat oracle_generator_matrix(const RibbonCategory& cat, ObjId x, ObjId y, ObjId z, int n,
                                   GenRef g) {
  if (g.index < 1 || g.index >= n)
    throw UsageError("oracle_generator_matrix: generator index out of range");
  const Mat change = paired_to_left_change(cat, x, y, z, n);
  std::vector<ObjId> leaves = alternating_leaves(x, y, n);
  Mat acc = change;
  for (const ElementaryCrossing& cr : generator_crossing_word(g)) {
    acc = elementary_braid_matrix(cat, leaves, z, cr.position, cr.sign) * acc;
    leaves = swap_adjacent_leaves(std::move(leaves), cr.position);
  }
  if (leaves != alternating_leaves(x, y, n))
    throw Error("internal: crossing word failed to restore the leaf sequence");
  return change.inverse() * acc;
}

/** Per-generator agreement between the closed forms and the crossing oracle. */
struct EquivalenceReport {
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> differences;  ///< ("sigma_i" / "s_j", max-norm)
  double max_difference = 0.0;
  bool pass = true;
};

/**
 * @brief Compare every closed-form generator matrix against its oracle
 *        counterpart in entrywise max-norm; pass iff all agree within tol.
 */
inline EquivalenceReport oracle_equivalence(const RibbonCategory& cat, ObjId x, ObjId y, ObjId z,
                                            int n, double tol = 1e-9) {
  EquivalenceReport rep;
  rep.tolerance = tol;
  for (int i = 1; i < n; ++i)
    for (bool is_sigma : {true, false}) {
      const Mat closed = is_sigma ? sigma_tilde_matrix(cat, x, y, z, n, i)
                                  : s_tilde_matrix(cat, x, y, z, n, i);
      const Mat oracle = oracle_generator_matrix(cat, x, y, z, n, GenRef{is_sigma, i});
      const double d = Mat::max_abs_diff(closed, oracle);
      rep.differences.emplace_back((is_sigma ? "sigma_" : "s_") + std::to_string(i), d);
      rep.max_difference = std::max(rep.max_difference, d);
      if (d > tol) rep.pass = false;
    }
  return rep;
}

}  // namespace loopbraid
