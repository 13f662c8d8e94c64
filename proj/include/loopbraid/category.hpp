#pragma once
/**
 * @file category.hpp
 * @brief Core data model: multiplicity-free ribbon fusion categories given by
 *        explicit F-symbols, R-symbols and twists, plus structural validation
 *        and exhaustive pentagon / hexagon / ribbon coherence verification.
 *
 * Conventions used throughout the library
 * ---------------------------------------
 * Objects are identified by dense integer ids. Fusion is multiplicity-free:
 * N^{ab}_c in {0, 1}, stored as the set of admissible triples (a, b, c).
 *
 * F-symbols: F[a,b,c,d; e,f] is the coefficient in
 *     |((a b)_e c) -> d>  =  sum_f  F[a,b,c,d; e,f] |(a (b c)_f) -> d>,
 * i.e. e is the intermediate charge of the left-nested tree (input) and f the
 * intermediate charge of the right-nested tree (output). The tuple is
 * admissible when N^{ab}_e, N^{ec}_d, N^{bc}_f, N^{af}_d are all 1. Per
 * (a,b,c,d) block the matrix [F]_{fe} (rows f, columns e) is invertible; its
 * inverse is stored as Fbar with
 *     |(a (b c)_f) -> d>  =  sum_e  Fbar[a,b,c,d; e,f] |((a b)_e c) -> d>.
 *
 * R-symbols: R[a,b,c] is the phase picked up when a braids over b inside the
 * fusion channel c (a starts on the left). A positive elementary crossing of
 * strands carrying u (left) and v (right) in channel c therefore contributes
 * R[v,u,c]; the inverse crossing contributes 1/R[u,v,c].
 *
 * Twists: theta[a] with theta[unit] = 1 and |theta[a]| = 1; the ribbon
 * constraint ties them to the braiding via R[a,b,c] R[b,a,c] =
 * theta[c] / (theta[a] theta[b]).
 *
 * All verification matrices use the entrywise max-norm for residuals.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopbraid/matrix.hpp"

namespace loopbraid {

using ObjId = int;

/** Root of the library's exception hierarchy. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Category data is incomplete or mathematically corrupt (missing symbols, singular F-block...). */
class DataError : public Error {
 public:
  using Error::Error;
};

/** The caller supplied invalid input (unknown names, bad ranges, malformed files or words). */
class UsageError : public Error {
 public:
  using Error::Error;
};

/** A labelled simple object. */
struct SimpleObject {
  ObjId id = 0;
  std::string name;
};

/**
 * @brief Multiplicity-free fusion rules: the set of triples with N^{ab}_c = 1,
 *        together with the unit object and the duality involution.
 */
class FusionRules {
 public:
  FusionRules() = default;
  FusionRules(int num_objects, ObjId unit, std::vector<ObjId> dual,
              std::set<std::array<ObjId, 3>> triples)
      : num_objects_(num_objects), unit_(unit), dual_(std::move(dual)), triples_(std::move(triples)) {
    if (num_objects_ <= 0) throw DataError("FusionRules: need at least one object");
    if (unit_ < 0 || unit_ >= num_objects_) throw DataError("FusionRules: unit id out of range");
    if (static_cast<int>(dual_.size()) != num_objects_)
      throw DataError("FusionRules: dual map must cover every object");
    for (const auto& t : triples_)
      for (ObjId v : t)
        if (v < 0 || v >= num_objects_) throw DataError("FusionRules: fusion triple id out of range");
    channels_.assign(static_cast<std::size_t>(num_objects_) * num_objects_, {});
    for (const auto& t : triples_) channels_[idx(t[0], t[1])].push_back(t[2]);
    for (auto& ch : channels_) std::sort(ch.begin(), ch.end());
  }

  int num_objects() const { return num_objects_; }
  ObjId unit() const { return unit_; }
  ObjId dual(ObjId a) const { return dual_.at(static_cast<std::size_t>(a)); }
  const std::set<std::array<ObjId, 3>>& triples() const { return triples_; }

  /** N^{ab}_c == 1 ? */
  bool admissible(ObjId a, ObjId b, ObjId c) const {
    return triples_.count({a, b, c}) != 0;
  }

  /** Sorted list of c with N^{ab}_c = 1. */
  const std::vector<ObjId>& channels(ObjId a, ObjId b) const { return channels_[idx(a, b)]; }

 private:
  std::size_t idx(ObjId a, ObjId b) const {
    return static_cast<std::size_t>(a) * num_objects_ + b;
  }

  int num_objects_ = 0;
  ObjId unit_ = 0;
  std::vector<ObjId> dual_;
  std::set<std::array<ObjId, 3>> triples_;
  std::vector<std::vector<ObjId>> channels_;
};

/** Key for one F-symbol: (a, b, c, d, e, f) as documented at the top of this file. */
using FKey = std::array<ObjId, 6>;
/** Key for one R-symbol: (a, b, c) = R^{ab}_c. */
using RKey = std::array<ObjId, 3>;

/** Sparse table of F-symbols, keyed by admissible (a,b,c,d,e,f) tuples. */
class FSymbolTable {
 public:
  void set(const FKey& k, Complex v) { entries_[k] = v; }
  bool contains(const FKey& k) const { return entries_.count(k) != 0; }
  std::optional<Complex> get(const FKey& k) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<FKey, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<FKey, Complex> entries_;
};

/** Sparse table of R-symbols, keyed by admissible (a,b,c) triples. */
class RSymbolTable {
 public:
  void set(const RKey& k, Complex v) { entries_[k] = v; }
  bool contains(const RKey& k) const { return entries_.count(k) != 0; }
  std::optional<Complex> get(const RKey& k) const {
    auto it = entries_.find(k);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<RKey, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<RKey, Complex> entries_;
};

/**
 * @brief A ribbon fusion category given by explicit numerical data.
 *
 * Instances are immutable once assembled. assemble() precomputes the inverse
 * F-blocks (Fbar); blocks whose data is missing, non-square or singular are
 * recorded as issues that validate_structure() reports and that turn into a
 * DataError only if such a block is actually used.
 */
class RibbonCategory {
 public:
  RibbonCategory() = default;

  static RibbonCategory assemble(std::string name, std::vector<std::string> object_names,
                                 ObjId unit, std::vector<ObjId> dual,
                                 std::set<std::array<ObjId, 3>> triples, FSymbolTable f,
                                 RSymbolTable r, std::vector<Complex> twists) {
    RibbonCategory cat;
    cat.name_ = std::move(name);
    const int n = static_cast<int>(object_names.size());
    for (int i = 0; i < n; ++i) cat.objects_.push_back({i, object_names[static_cast<std::size_t>(i)]});
    cat.rules_ = FusionRules(n, unit, std::move(dual), std::move(triples));
    cat.f_ = std::move(f);
    cat.r_ = std::move(r);
    if (static_cast<int>(twists.size()) != n)
      throw DataError("RibbonCategory: twist list must cover every object");
    cat.twists_ = std::move(twists);
    cat.build_inverse_f_blocks();
    return cat;
  }

  const std::string& name() const { return name_; }
  const std::vector<SimpleObject>& objects() const { return objects_; }
  const FusionRules& rules() const { return rules_; }
  const FSymbolTable& f_table() const { return f_; }
  const RSymbolTable& r_table() const { return r_; }
  const std::vector<Complex>& twists() const { return twists_; }
  const std::vector<std::string>& inverse_block_issues() const { return fbar_issues_; }

  int num_objects() const { return rules_.num_objects(); }
  ObjId unit() const { return rules_.unit(); }
  ObjId dual(ObjId a) const { return rules_.dual(a); }
  Complex twist(ObjId a) const { return twists_.at(static_cast<std::size_t>(a)); }

  const std::string& name_of(ObjId a) const { return objects_.at(static_cast<std::size_t>(a)).name; }

  /** Exact-name lookup; returns std::nullopt when no object carries the name. */
  std::optional<ObjId> find_object(const std::string& name) const {
    for (const auto& o : objects_)
      if (o.name == name) return o.id;
    return std::nullopt;
  }

  bool f_admissible(ObjId a, ObjId b, ObjId c, ObjId d, ObjId e, ObjId f) const {
    return rules_.admissible(a, b, e) && rules_.admissible(e, c, d) &&
           rules_.admissible(b, c, f) && rules_.admissible(a, f, d);
  }

  /**
   * F[a,b,c,d; e,f]: 0 when the tuple is inadmissible; DataError when the
   * tuple is admissible but absent from the table (incomplete data).
   */
  Complex f_sym(ObjId a, ObjId b, ObjId c, ObjId d, ObjId e, ObjId f) const {
    if (!f_admissible(a, b, c, d, e, f)) return Complex{};
    auto v = f_.get({a, b, c, d, e, f});
    if (!v) throw DataError("missing F-symbol for admissible tuple " + f_label(a, b, c, d, e, f));
    return *v;
  }

  /** Fbar[a,b,c,d; e,f] with the same zero / DataError semantics as f_sym. */
  Complex fbar_sym(ObjId a, ObjId b, ObjId c, ObjId d, ObjId e, ObjId f) const {
    if (!f_admissible(a, b, c, d, e, f)) return Complex{};
    auto it = fbar_.find({a, b, c, d, e, f});
    if (it == fbar_.end())
      throw DataError("missing inverse F-block entry for admissible tuple " +
                      f_label(a, b, c, d, e, f) + " (block data incomplete or singular)");
    return it->second;
  }

  /** R[a,b,c]: 0 when (a,b,c) is inadmissible; DataError when admissible but absent. */
  Complex r_sym(ObjId a, ObjId b, ObjId c) const {
    if (!rules_.admissible(a, b, c)) return Complex{};
    auto v = r_.get({a, b, c});
    if (!v)
      throw DataError("missing R-symbol for admissible triple (" + name_of(a) + "," + name_of(b) +
                      ";" + name_of(c) + ")");
    return *v;
  }

  /** 1 / R[a,b,c]; DataError on a vanishing stored R-symbol. */
  Complex rbar_sym(ObjId a, ObjId b, ObjId c) const {
    const Complex v = r_sym(a, b, c);
    if (v == Complex{}) {
      if (!rules_.admissible(a, b, c)) return Complex{};
      throw DataError("R-symbol (" + name_of(a) + "," + name_of(b) + ";" + name_of(c) +
                      ") is zero and cannot be inverted");
    }
    return 1.0 / v;
  }

  std::string f_label(ObjId a, ObjId b, ObjId c, ObjId d, ObjId e, ObjId f) const {
    std::ostringstream os;
    os << "(a=" << name_of(a) << ",b=" << name_of(b) << ",c=" << name_of(c) << ",d=" << name_of(d)
       << ";e=" << name_of(e) << ",f=" << name_of(f) << ")";
    return os.str();
  }

 private:
  /**
   * Per admissible (a,b,c,d) block, invert the matrix [F]_{fe} (rows f,
   * columns e) and store the result keyed alongside F. Problems are recorded
   * rather than thrown so a broken file can still be loaded and reported on.
   */
  void build_inverse_f_blocks() {
    const int n = rules_.num_objects();
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        for (ObjId c = 0; c < n; ++c)
          for (ObjId d = 0; d < n; ++d) {
            std::vector<ObjId> es, fs;
            for (ObjId e : rules_.channels(a, b))
              if (rules_.admissible(e, c, d)) es.push_back(e);
            for (ObjId f : rules_.channels(b, c))
              if (rules_.admissible(a, f, d)) fs.push_back(f);
            if (es.empty() && fs.empty()) continue;
            std::ostringstream block;
            block << "F-block (" << name_of(a) << "," << name_of(b) << "," << name_of(c) << ";"
                  << name_of(d) << ")";
            if (es.size() != fs.size()) {
              fbar_issues_.push_back(block.str() + " is not square: " + std::to_string(es.size()) +
                                     " left vs " + std::to_string(fs.size()) + " right trees");
              continue;
            }
            Mat m(fs.size(), es.size());
            bool complete = true;
            for (std::size_t fi = 0; fi < fs.size() && complete; ++fi)
              for (std::size_t ei = 0; ei < es.size(); ++ei) {
                auto v = f_.get({a, b, c, d, es[ei], fs[fi]});
                if (!v) {
                  fbar_issues_.push_back(block.str() + " has a missing entry at " +
                                         f_label(a, b, c, d, es[ei], fs[fi]));
                  complete = false;
                  break;
                }
                m.at(fi, ei) = *v;
              }
            if (!complete) continue;
            Mat inv;
            try {
              inv = m.inverse();
            } catch (const std::domain_error&) {
              fbar_issues_.push_back(block.str() + " is singular");
              continue;
            }
            const double resid = (m * inv).distance_to_identity();
            if (resid > 1e-12) {
              fbar_issues_.push_back(block.str() + " inversion residual " + std::to_string(resid) +
                                     " exceeds 1e-12");
              continue;
            }
            for (std::size_t ei = 0; ei < es.size(); ++ei)
              for (std::size_t fi = 0; fi < fs.size(); ++fi)
                fbar_[{a, b, c, d, es[ei], fs[fi]}] = inv.at(ei, fi);
          }
  }

  std::string name_;
  std::vector<SimpleObject> objects_;
  FusionRules rules_;
  FSymbolTable f_;
  RSymbolTable r_;
  std::vector<Complex> twists_;
  std::map<FKey, Complex> fbar_;
  std::vector<std::string> fbar_issues_;
};

// ---------------------------------------------------------------------------
// Structural validation
// ---------------------------------------------------------------------------

struct ValidationIssue {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/**
 * @brief Check every structural invariant that does not involve the coherence
 *        equations: unit laws, duality, commutativity and associativity of the
 *        fusion rules, present-iff-admissible symbol tables, normalized
 *        unit-leg symbols, unimodular twists, and invertible F-blocks.
 */
inline ValidationReport validate_structure(const RibbonCategory& cat) {
  ValidationReport rep;
  auto add = [&rep](const std::string& code, const std::string& detail) {
    rep.issues.push_back({code, detail});
  };
  const FusionRules& ru = cat.rules();
  const int n = ru.num_objects();
  const ObjId one = ru.unit();

  std::set<std::string> seen_names;
  for (const auto& o : cat.objects()) {
    if (o.name.empty()) add("object-name", "object id " + std::to_string(o.id) + " has an empty name");
    if (!seen_names.insert(o.name).second) add("object-name", "duplicate object name '" + o.name + "'");
  }

  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      if (ru.admissible(one, a, b) != (a == b))
        add("unit-law", "N(1," + cat.name_of(a) + ";" + cat.name_of(b) + ") violates the left unit law");
      if (ru.admissible(a, one, b) != (a == b))
        add("unit-law", "N(" + cat.name_of(a) + ",1;" + cat.name_of(b) + ") violates the right unit law");
      if (ru.admissible(a, b, one) != (b == ru.dual(a)))
        add("duality", "N(" + cat.name_of(a) + "," + cat.name_of(b) +
                           ";1) disagrees with the dual map");
      for (ObjId c = 0; c < n; ++c)
        if (ru.admissible(a, b, c) != ru.admissible(b, a, c)) {
          add("commutativity", "N(" + cat.name_of(a) + "," + cat.name_of(b) + ";" + cat.name_of(c) +
                                   ") != N(" + cat.name_of(b) + "," + cat.name_of(a) + ";" +
                                   cat.name_of(c) + ")");
        }
    }
    if (ru.dual(ru.dual(a)) != a)
      add("duality", "dual map is not an involution at " + cat.name_of(a));
  }

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (ObjId e = 0; e < n; ++e) {
            lhs += (ru.admissible(a, b, e) && ru.admissible(e, c, d)) ? 1 : 0;
            rhs += (ru.admissible(b, c, e) && ru.admissible(a, e, d)) ? 1 : 0;
          }
          if (lhs != rhs)
            add("associativity", "fusion of (" + cat.name_of(a) + "," + cat.name_of(b) + "," +
                                     cat.name_of(c) + ")->" + cat.name_of(d) +
                                     " has mismatched path counts " + std::to_string(lhs) + " vs " +
                                     std::to_string(rhs));
        }

  // F table: present iff admissible; unit-leg entries equal 1.
  for (const auto& [k, v] : cat.f_table().entries()) {
    if (!cat.f_admissible(k[0], k[1], k[2], k[3], k[4], k[5]))
      add("f-admissible", "stored F-symbol at inadmissible tuple " +
                              cat.f_label(k[0], k[1], k[2], k[3], k[4], k[5]));
    else if ((k[0] == one || k[1] == one || k[2] == one) && std::abs(v - 1.0) > 1e-12)
      add("f-unit-leg", "unit-leg F-symbol " + cat.f_label(k[0], k[1], k[2], k[3], k[4], k[5]) +
                            " differs from 1");
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId e : ru.channels(a, b))
          for (ObjId f : ru.channels(b, c))
            for (ObjId d : ru.channels(e, c))
              if (ru.admissible(a, f, d) && !cat.f_table().contains({a, b, c, d, e, f}))
                add("f-missing", "no F-symbol stored for admissible tuple " +
                                     cat.f_label(a, b, c, d, e, f));

  // R table: present iff admissible; unit-leg entries equal 1; entries nonzero.
  for (const auto& [k, v] : cat.r_table().entries()) {
    if (!ru.admissible(k[0], k[1], k[2]))
      add("r-admissible", "stored R-symbol at inadmissible triple (" + cat.name_of(k[0]) + "," +
                              cat.name_of(k[1]) + ";" + cat.name_of(k[2]) + ")");
    else {
      if ((k[0] == one || k[1] == one) && std::abs(v - 1.0) > 1e-12)
        add("r-unit-leg", "unit-leg R-symbol (" + cat.name_of(k[0]) + "," + cat.name_of(k[1]) + ";" +
                              cat.name_of(k[2]) + ") differs from 1");
      if (std::abs(v) < 1e-14)
        add("r-zero", "R-symbol (" + cat.name_of(k[0]) + "," + cat.name_of(k[1]) + ";" +
                          cat.name_of(k[2]) + ") is zero");
    }
  }
  for (const auto& t : ru.triples())
    if (!cat.r_table().contains({t[0], t[1], t[2]}))
      add("r-missing", "no R-symbol stored for admissible triple (" + cat.name_of(t[0]) + "," +
                           cat.name_of(t[1]) + ";" + cat.name_of(t[2]) + ")");

  for (ObjId a = 0; a < n; ++a) {
    const double mod = std::abs(cat.twist(a));
    if (std::abs(mod - 1.0) > 1e-12)
      add("twist-modulus", "twist of " + cat.name_of(a) + " is not a phase");
  }
  if (std::abs(cat.twist(one) - 1.0) > 1e-12) add("twist-unit", "twist of the unit object is not 1");

  for (const auto& issue : cat.inverse_block_issues()) add("f-invertibility", issue);

  return rep;
}

// ---------------------------------------------------------------------------
// Coherence verification (pentagon / hexagon / ribbon)
// ---------------------------------------------------------------------------

struct CoherenceViolation {
  std::string equation;
  std::string labels;
  double residual = 0.0;
};

struct CoherenceReport {
  std::size_t instances_checked = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t violation_count = 0;
  std::vector<CoherenceViolation> violations;  ///< capped at 200 recorded entries
  bool pass() const { return violation_count == 0; }

  void record(const std::string& equation, const std::string& labels, double residual,
              double tol) {
    ++instances_checked;
    max_residual = std::max(max_residual, residual);
    if (residual > tol) {
      ++violation_count;
      if (violations.size() < 200) violations.push_back({equation, labels, residual});
    }
  }
};

/**
 * @brief Exhaustively verify the pentagon identity over every admissible
 *        instance. With the conventions above the identity reads
 *
 *   F[e,c,d,E; f,g] F[a,b,g,E; e,h]
 *     = sum_k F[a,b,c,f; e,k] F[a,k,d,E; f,h] F[b,c,d,h; k,g]
 *
 * for each left tree (e,f) and right tree (g,h) of the five outer labels
 * (a,b,c,d -> E). Lookups at inadmissible tuples contribute 0; admissible but
 * missing entries raise DataError.
 */
inline CoherenceReport verify_pentagon(const RibbonCategory& cat, double tol = 1e-9) {
  CoherenceReport rep;
  rep.tolerance = tol;
  const FusionRules& ru = cat.rules();
  const int n = ru.num_objects();
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d)
          for (ObjId e : ru.channels(a, b))
            for (ObjId f : ru.channels(e, c))
              for (ObjId E : ru.channels(f, d))
                for (ObjId g : ru.channels(c, d))
                  for (ObjId h : ru.channels(b, g)) {
                    if (!ru.admissible(a, h, E)) continue;
                    const Complex lhs =
                        cat.f_sym(e, c, d, E, f, g) * cat.f_sym(a, b, g, E, e, h);
                    Complex rhs{};
                    for (ObjId k : ru.channels(b, c))
                      rhs += cat.f_sym(a, b, c, f, e, k) * cat.f_sym(a, k, d, E, f, h) *
                             cat.f_sym(b, c, d, h, k, g);
                    std::ostringstream lab;
                    lab << "(a=" << cat.name_of(a) << ",b=" << cat.name_of(b)
                        << ",c=" << cat.name_of(c) << ",d=" << cat.name_of(d)
                        << ",total=" << cat.name_of(E) << ";e=" << cat.name_of(e)
                        << ",f=" << cat.name_of(f) << ",g=" << cat.name_of(g)
                        << ",h=" << cat.name_of(h) << ")";
                    rep.record("pentagon", lab.str(), std::abs(lhs - rhs), tol);
                  }
  return rep;
}

/**
 * @brief Exhaustively verify both hexagon identities and the ribbon/twist
 *        constraint. With the conventions above:
 *
 *   sum_e Fbar[a,b,c,d; e,f] R[b,a,e] F[b,a,c,d; e,g] * R[c,a,g]
 *       = R[f,a,d] F[b,c,a,d; f,g]                          (hexagon-R)
 *
 *   sum_e Fbar[a,b,c,d; e,f] (1/R[a,b,e]) F[b,a,c,d; e,g] * (1/R[a,c,g])
 *       = (1/R[a,f,d]) F[b,c,a,d; f,g]                      (hexagon-Rinv)
 *
 *   R[a,b,c] R[b,a,c] = theta[c] / (theta[a] theta[b])      (ribbon-twist)
 */
inline CoherenceReport verify_hexagon(const RibbonCategory& cat, double tol = 1e-9) {
  CoherenceReport rep;
  rep.tolerance = tol;
  const FusionRules& ru = cat.rules();
  const int n = ru.num_objects();
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d)
          for (ObjId f : ru.channels(b, c)) {
            if (!ru.admissible(a, f, d)) continue;
            for (ObjId g : ru.channels(a, c)) {
              if (!ru.admissible(b, g, d)) continue;
              Complex acc_pos{}, acc_neg{};
              for (ObjId e : ru.channels(a, b)) {
                if (!ru.admissible(e, c, d)) continue;
                const Complex fbar = cat.fbar_sym(a, b, c, d, e, f);
                const Complex fwd = cat.f_sym(b, a, c, d, e, g);
                acc_pos += fbar * cat.r_sym(b, a, e) * fwd;
                acc_neg += fbar * cat.rbar_sym(a, b, e) * fwd;
              }
              const Complex cross = cat.f_sym(b, c, a, d, f, g);
              const Complex lhs_pos = acc_pos * cat.r_sym(c, a, g);
              const Complex rhs_pos = cat.r_sym(f, a, d) * cross;
              const Complex lhs_neg = acc_neg * cat.rbar_sym(a, c, g);
              const Complex rhs_neg = cat.rbar_sym(a, f, d) * cross;
              std::ostringstream lab;
              lab << "(a=" << cat.name_of(a) << ",b=" << cat.name_of(b) << ",c=" << cat.name_of(c)
                  << ",d=" << cat.name_of(d) << ";f=" << cat.name_of(f) << ",g=" << cat.name_of(g)
                  << ")";
              rep.record("hexagon-R", lab.str(), std::abs(lhs_pos - rhs_pos), tol);
              rep.record("hexagon-Rinv", lab.str(), std::abs(lhs_neg - rhs_neg), tol);
            }
          }
  for (const auto& t : ru.triples()) {
    const Complex lhs = cat.r_sym(t[0], t[1], t[2]) * cat.r_sym(t[1], t[0], t[2]);
    const Complex rhs = cat.twist(t[2]) / (cat.twist(t[0]) * cat.twist(t[1]));
    std::ostringstream lab;
    lab << "(" << cat.name_of(t[0]) << "," << cat.name_of(t[1]) << ";" << cat.name_of(t[2]) << ")";
    rep.record("ribbon-twist", lab.str(), std::abs(lhs - rhs), tol);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Derived quantities
// ---------------------------------------------------------------------------

/**
 * @brief Frobenius-Perron dimension of object a: the largest eigenvalue of the
 *        fusion matrix (N_a)_{bc} = N^{ab}_c, computed by power iteration on
 *        the shifted matrix N_a + I (the shift makes the dominant eigenvalue
 *        unique in modulus; the Perron vector is entrywise nonnegative).
 */
inline double quantum_dimension(const RibbonCategory& cat, ObjId a) {
  const FusionRules& ru = cat.rules();
  const int n = ru.num_objects();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0), w(static_cast<std::size_t>(n));
  double lambda = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    for (int b = 0; b < n; ++b) {
      double s = v[static_cast<std::size_t>(b)];  // the +I shift
      for (ObjId c : ru.channels(a, b)) s += v[static_cast<std::size_t>(c)];
      w[static_cast<std::size_t>(b)] = s;
    }
    double norm_v = 0.0, norm_w = 0.0;
    for (int b = 0; b < n; ++b) {
      norm_v += v[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(b)];
      norm_w += w[static_cast<std::size_t>(b)] * w[static_cast<std::size_t>(b)];
    }
    const double next = std::sqrt(norm_w / norm_v);
    for (int b = 0; b < n; ++b) w[static_cast<std::size_t>(b)] /= std::sqrt(norm_w);
    std::swap(v, w);
    if (iter > 3 && std::abs(next - lambda) < 1e-14) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda - 1.0;
}

enum class ParticleClass { boson, fermion, neither };

inline std::string to_string(ParticleClass c) {
  switch (c) {
    case ParticleClass::boson: return "boson";
    case ParticleClass::fermion: return "fermion";
    default: return "neither";
  }
}

/**
 * @brief Classify an object as boson / fermion / neither: invertible (its
 *        fusion with the dual contains only the unit) with twist +1 resp. -1
 *        within tol; anything else is "neither".
 */
inline ParticleClass classify_boson_fermion(const RibbonCategory& cat, ObjId z,
                                            double tol = 1e-9) {
  const FusionRules& ru = cat.rules();
  int total_channels = 0;
  for (ObjId c = 0; c < ru.num_objects(); ++c)
    if (ru.admissible(z, ru.dual(z), c)) ++total_channels;
  const bool invertible = (total_channels == 1) && ru.admissible(z, ru.dual(z), ru.unit());
  if (!invertible) return ParticleClass::neither;
  if (std::abs(cat.twist(z) - 1.0) <= tol) return ParticleClass::boson;
  if (std::abs(cat.twist(z) + 1.0) <= tol) return ParticleClass::fermion;
  return ParticleClass::neither;
}

}  // namespace loopbraid
