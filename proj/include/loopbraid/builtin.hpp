#pragma once
/**
 * @file builtin.hpp
 * @brief Built-in ribbon categories: the trivial category, the Ising category,
 *        and the Tambara-Yamagami families over (Z_2)^k with their braidings.
 *
 * Every constructor self-certifies: after assembling the numerical data it
 * runs the full structural validation plus the exhaustive pentagon, hexagon
 * and ribbon checks, and throws DataError if anything fails. Construction
 * therefore never hands back an incoherent category.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "loopbraid/category.hpp"

namespace loopbraid {

namespace detail {

/** Run the full certification stack on a freshly built category. */
inline void certify(const RibbonCategory& cat, const std::string& who) {
  const ValidationReport v = validate_structure(cat);
  if (!v.ok())
    throw DataError(who + ": self-certification failed: " + v.issues.front().code + ": " +
                    v.issues.front().detail);
  const CoherenceReport p = verify_pentagon(cat, 1e-9);
  if (!p.pass())
    throw DataError(who + ": self-certification failed: pentagon violation at " +
                    p.violations.front().labels);
  const CoherenceReport h = verify_hexagon(cat, 1e-9);
  if (!h.pass())
    throw DataError(who + ": self-certification failed: " + h.violations.front().equation +
                    " violation at " + h.violations.front().labels);
}

/** Populate every admissible F-tuple with coefficient 1 (the generic-gauge default). */
inline void fill_unit_f(const FusionRules& ru, FSymbolTable& f) {
  const int n = ru.num_objects();
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId e : ru.channels(a, b))
          for (ObjId ff : ru.channels(b, c))
            for (ObjId d : ru.channels(e, c))
              if (ru.admissible(a, ff, d)) f.set({a, b, c, d, e, ff}, 1.0);
}

/** Populate every admissible R-triple with coefficient 1. */
inline void fill_unit_r(const FusionRules& ru, RSymbolTable& r) {
  for (const auto& t : ru.triples()) r.set({t[0], t[1], t[2]}, 1.0);
}

}  // namespace detail

/** The one-object category: unit fusion, trivial braiding. */
inline RibbonCategory trivial() {
  FSymbolTable f;
  f.set({0, 0, 0, 0, 0, 0}, 1.0);
  RSymbolTable r;
  r.set({0, 0, 0}, 1.0);
  RibbonCategory cat = RibbonCategory::assemble("trivial", {"1"}, 0, {0}, {{0, 0, 0}}, std::move(f),
                                                std::move(r), {1.0});
  detail::certify(cat, "trivial");
  return cat;
}

/**
 * @brief The Ising category: objects 1, sigma, psi with sigma x sigma = 1 + psi,
 *        sigma x psi = sigma, psi x psi = 1; twists (1, e^{i pi/8}, -1).
 */
inline RibbonCategory ising() {
  const ObjId one = 0, sg = 1, ps = 2;
  std::set<std::array<ObjId, 3>> triples;
  for (ObjId a = 0; a < 3; ++a) {
    triples.insert({one, a, a});
    triples.insert({a, one, a});
  }
  triples.insert({sg, sg, one});
  triples.insert({sg, sg, ps});
  triples.insert({sg, ps, sg});
  triples.insert({ps, sg, sg});
  triples.insert({ps, ps, one});
  FusionRules rules(3, one, {one, sg, ps}, triples);

  FSymbolTable f;
  detail::fill_unit_f(rules, f);
  const double s = 1.0 / std::sqrt(2.0);
  f.set({sg, sg, sg, sg, one, one}, s);
  f.set({sg, sg, sg, sg, one, ps}, s);
  f.set({sg, sg, sg, sg, ps, one}, s);
  f.set({sg, sg, sg, sg, ps, ps}, -s);
  f.set({ps, sg, ps, sg, sg, sg}, -1.0);
  f.set({sg, ps, sg, ps, sg, sg}, -1.0);

  RSymbolTable r;
  detail::fill_unit_r(rules, r);
  const double pi = std::numbers::pi;
  r.set({sg, sg, one}, std::polar(1.0, -pi / 8));
  r.set({sg, sg, ps}, std::polar(1.0, 3 * pi / 8));
  r.set({ps, ps, one}, -1.0);
  r.set({sg, ps, sg}, Complex(0.0, -1.0));
  r.set({ps, sg, sg}, Complex(0.0, -1.0));

  std::vector<Complex> twists = {1.0, std::polar(1.0, pi / 8), -1.0};

  RibbonCategory cat = RibbonCategory::assemble("ising", {"1", "sigma", "psi"}, one, {one, sg, ps},
                                                triples, std::move(f), std::move(r),
                                                std::move(twists));
  detail::certify(cat, "ising");
  return cat;
}

/**
 * @brief Parameters for the Tambara-Yamagami category over G = (Z_2)^k.
 *
 * The fusion rules are g x h = g+h, g x m = m x g = m, m x m = sum_g g.
 * The associator is fixed by a symmetric nondegenerate bicharacter chi on G
 * and a sign (the normalization of the m-m-m block). A braiding on top of
 * that involves further discrete choices, exposed here explicitly:
 * refinement_signs picks the quadratic refinement u of chi on the generators
 * (u(e_i) = refinement_signs[i] * i when chi(e_i,e_i) = -1, else
 * refinement_signs[i] * 1), and root_branch picks the square root defining
 * the m-over-m braiding normalization. Defaults reproduce the built-in Ising
 * data at k = 1.
 */
struct TYParams {
  int k = 1;
  /** Rows of the bicharacter's GF(2) Gram matrix as bitmasks; empty = identity matrix. */
  std::vector<unsigned> bicharacter_rows;
  /** Sign of the m-m-m F-block normalization: +1 or -1. */
  int sign = +1;
  /** Per-generator signs (+1/-1) seeding the quadratic refinement; empty = all -1. */
  std::vector<int> refinement_signs;
  /** Square-root branch (+1/-1) for the m-over-m braiding normalization. */
  int root_branch = +1;
};

/**
 * @brief Build the braided Tambara-Yamagami category TY((Z_2)^k) for the given
 *        parameters. The R-symbols are obtained by forward substitution
 *        through the hexagon system (group sector forced to chi; the mixed
 *        sectors from the quadratic refinement; the m-m normalization from
 *        the Gauss sum), and the result is then re-certified against the full
 *        pentagon / hexagon / ribbon system; parameter sets that admit no
 *        solution are rejected with a diagnostic.
 */
inline RibbonCategory tambara_yamagami(const TYParams& p) {
  if (p.k < 1 || p.k > 3)
    throw UsageError("tambara_yamagami: supported group rank k is 1..3, got " +
                     std::to_string(p.k));
  const int k = p.k;
  const unsigned order = 1u << k;  // |G|

  std::vector<unsigned> rows = p.bicharacter_rows;
  if (rows.empty())
    for (int i = 0; i < k; ++i) rows.push_back(1u << i);
  if (static_cast<int>(rows.size()) != k)
    throw UsageError("tambara_yamagami: bicharacter needs exactly k rows");
  for (unsigned row : rows)
    if (row >= order) throw UsageError("tambara_yamagami: bicharacter row out of range");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (((rows[static_cast<std::size_t>(i)] >> j) & 1u) !=
          ((rows[static_cast<std::size_t>(j)] >> i) & 1u))
        throw UsageError("tambara_yamagami: bicharacter matrix must be symmetric");
  {  // nondegeneracy = full GF(2) rank
    std::vector<unsigned> elim = rows;
    int rank = 0;
    for (int col = 0; col < k; ++col) {
      int pivot = -1;
      for (int r = rank; r < k; ++r)
        if ((elim[static_cast<std::size_t>(r)] >> col) & 1u) { pivot = r; break; }
      if (pivot < 0) continue;
      std::swap(elim[static_cast<std::size_t>(pivot)], elim[static_cast<std::size_t>(rank)]);
      for (int r = 0; r < k; ++r)
        if (r != rank && ((elim[static_cast<std::size_t>(r)] >> col) & 1u))
          elim[static_cast<std::size_t>(r)] ^= elim[static_cast<std::size_t>(rank)];
      ++rank;
    }
    if (rank != k)
      throw UsageError("tambara_yamagami: bicharacter is degenerate (GF(2) rank " +
                       std::to_string(rank) + " < " + std::to_string(k) + ")");
  }
  std::vector<int> refinement = p.refinement_signs;
  if (refinement.empty()) refinement.assign(static_cast<std::size_t>(k), -1);
  if (static_cast<int>(refinement.size()) != k)
    throw UsageError("tambara_yamagami: refinement_signs needs exactly k entries");
  for (int s : refinement)
    if (s != 1 && s != -1) throw UsageError("tambara_yamagami: refinement signs must be +1 or -1");
  if (p.sign != 1 && p.sign != -1)
    throw UsageError("tambara_yamagami: sign must be +1 or -1");
  if (p.root_branch != 1 && p.root_branch != -1)
    throw UsageError("tambara_yamagami: root_branch must be +1 or -1");

  // chi(g, h) = (-1)^{g^T B h} from the Gram rows.
  auto chi = [&rows, k](unsigned g, unsigned h) -> double {
    unsigned parity = 0;
    for (int i = 0; i < k; ++i)
      if ((g >> i) & 1u) parity ^= static_cast<unsigned>(__builtin_popcount(rows[static_cast<std::size_t>(i)] & h)) & 1u;
    return parity ? -1.0 : 1.0;
  };

  // Quadratic refinement u with u(g+h) = u(g) u(h) chi(g,h), seeded on generators.
  std::vector<Complex> u(order);
  u[0] = 1.0;
  for (int i = 0; i < k; ++i) {
    const unsigned e = 1u << i;
    const double self = chi(e, e);
    u[e] = (self < 0 ? Complex(0.0, 1.0) : Complex(1.0, 0.0)) *
           static_cast<double>(refinement[static_cast<std::size_t>(i)]);
  }
  for (unsigned g = 1; g < order; ++g) {
    const unsigned low = g & (~g + 1u);
    if (low == g) continue;  // generators already seeded
    const unsigned rest = g ^ low;
    u[g] = u[rest] * u[low] * chi(rest, low);
  }

  Complex gauss{};
  for (unsigned g = 0; g < order; ++g) gauss += u[g];
  const double sqrt_order = std::sqrt(static_cast<double>(order));
  if (std::abs(std::abs(gauss) - sqrt_order) > 1e-9) {
    std::ostringstream os;
    os << "tambara_yamagami: no consistent braiding: Gauss sum of the quadratic refinement has "
          "modulus "
       << std::abs(gauss) << ", expected " << sqrt_order;
    throw DataError(os.str());
  }
  const Complex w0 = static_cast<double>(p.root_branch) *
                     std::sqrt(static_cast<double>(p.sign) * gauss / sqrt_order);

  // Objects: group elements 0..|G|-1 (named by k-bit binary strings, most
  // significant component first), then m = |G|.
  const ObjId m = static_cast<ObjId>(order);
  std::vector<std::string> names;
  for (unsigned g = 0; g < order; ++g) {
    std::string s(static_cast<std::size_t>(k), '0');
    for (int i = 0; i < k; ++i)
      if ((g >> i) & 1u) s[static_cast<std::size_t>(k - 1 - i)] = '1';
    names.push_back(s);
  }
  names.push_back("m");

  std::set<std::array<ObjId, 3>> triples;
  for (unsigned g = 0; g < order; ++g) {
    for (unsigned h = 0; h < order; ++h)
      triples.insert({static_cast<ObjId>(g), static_cast<ObjId>(h), static_cast<ObjId>(g ^ h)});
    triples.insert({static_cast<ObjId>(g), m, m});
    triples.insert({m, static_cast<ObjId>(g), m});
    triples.insert({m, m, static_cast<ObjId>(g)});
  }
  std::vector<ObjId> dual;
  for (unsigned g = 0; g < order; ++g) dual.push_back(static_cast<ObjId>(g));
  dual.push_back(m);
  FusionRules rules(static_cast<int>(order) + 1, 0, dual, triples);

  FSymbolTable f;
  detail::fill_unit_f(rules, f);
  const double tau = static_cast<double>(p.sign) / sqrt_order;
  for (unsigned g = 0; g < order; ++g)
    for (unsigned h = 0; h < order; ++h) {
      const ObjId og = static_cast<ObjId>(g), oh = static_cast<ObjId>(h);
      f.set({og, m, oh, m, m, m}, chi(g, h));
      f.set({m, og, m, oh, m, m}, chi(g, h));
      f.set({m, m, m, m, og, oh}, tau * chi(g, h));
    }

  RSymbolTable r;
  for (unsigned g = 0; g < order; ++g) {
    for (unsigned h = 0; h < order; ++h)
      r.set({static_cast<ObjId>(g), static_cast<ObjId>(h), static_cast<ObjId>(g ^ h)}, chi(g, h));
    r.set({static_cast<ObjId>(g), m, m}, u[g]);
    r.set({m, static_cast<ObjId>(g), m}, chi(g, g) / u[g]);
    r.set({m, m, static_cast<ObjId>(g)}, w0 / u[g]);
  }

  std::vector<Complex> twists;
  for (unsigned g = 0; g < order; ++g) twists.push_back(chi(g, g));
  twists.push_back(1.0 / w0);

  std::ostringstream nm;
  nm << "ty-z2";
  if (k > 1) nm << "^" << k;
  RibbonCategory cat = RibbonCategory::assemble(nm.str(), names, 0, dual, triples, std::move(f),
                                                std::move(r), std::move(twists));
  detail::certify(cat, "tambara_yamagami");
  return cat;
}

}  // namespace loopbraid
