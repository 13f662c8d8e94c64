#pragma once
/**
 * @file io.hpp
 * @brief Category data files and deterministic report/matrix rendering.
 *
 * Category file format (JSON, versioned by the "format" field):
 *
 *   {
 *     "format": "loopbraid-category-v1",
 *     "name": "ising",
 *     "objects": ["1", "sigma", "psi"],   // index in this list = object id
 *     "unit": 0,
 *     "dual": [0, 1, 2],
 *     "fusion": [[0,0,0], ...],           // admissible triples (a,b)->c
 *     "f_symbols": [{"a":..,"b":..,"c":..,"d":..,"e":..,"f":..,"value":[re,im]}, ...],
 *     "r_symbols": [{"a":..,"b":..,"c":..,"value":[re,im]}, ...],
 *     "twists":    [{"a":..,"value":[re,im]}, ...]
 *   }
 *
 * Fusion rules are multiplicity-free: a repeated fusion triple is rejected,
 * since listing (a,b,c) twice is the only way the format could express a
 * multiplicity of 2. F-symbols whose first three legs include the unit and
 * R-symbols with a unit leg are gauge-fixed to 1: saving omits them (unless
 * they hold a non-unit value, which saving preserves verbatim so that a
 * save faithfully reproduces even not-yet-validated data) and loading fills
 * the omitted admissible entries with 1.
 *
 * Saving is canonical: fixed key order, entries sorted by their labels, and
 * floats printed with 17 significant digits, so save -> load -> save is
 * byte-identical and equal inputs produce equal bytes. Parsing uses a
 * standard JSON parser; only the emitter is hand-rolled.
 *
 * The json_* helpers below render matrices, bases and reports as compact
 * canonical JSON values for the CLI's structured run documents; the human_*
 * helpers produce the terminal rendering.
 */

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "loopbraid/braid_oracle.hpp"
#include "loopbraid/category.hpp"
#include "loopbraid/fusion_basis.hpp"
#include "loopbraid/loop_rep.hpp"
#include "loopbraid/matrix.hpp"

namespace loopbraid {

inline constexpr const char* kCategoryFormat = "loopbraid-category-v1";

// ---------------------------------------------------------------------------
// Canonical emission primitives
// ---------------------------------------------------------------------------

/** Shortest-faithful float rendering: 17 significant digits round-trip. */
inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // canonicalize -0.0, which JSON parsing cannot preserve
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

/** A complex scalar as the two-element array [re, im]. */
inline std::string json_complex(Complex v) {
  return "[" + format_double(v.real()) + "," + format_double(v.imag()) + "]";
}

// ---------------------------------------------------------------------------
// Category files
// ---------------------------------------------------------------------------

/** Serialize a category to the canonical v1 file format. */
inline std::string save_category(const RibbonCategory& cat) {
  const ObjId one = cat.unit();
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << json_escape(kCategoryFormat) << ",\n";
  os << "  \"name\": " << json_escape(cat.name()) << ",\n";
  os << "  \"objects\": [";
  for (int i = 0; i < cat.num_objects(); ++i)
    os << (i ? ", " : "") << json_escape(cat.name_of(i));
  os << "],\n";
  os << "  \"unit\": " << one << ",\n";
  os << "  \"dual\": [";
  for (int i = 0; i < cat.num_objects(); ++i) os << (i ? ", " : "") << cat.dual(i);
  os << "],\n";

  os << "  \"fusion\": [";
  bool first = true;
  for (const auto& t : cat.rules().triples()) {  // std::set: already sorted
    os << (first ? "\n" : ",\n") << "    [" << t[0] << ", " << t[1] << ", " << t[2] << "]";
    first = false;
  }
  os << (first ? "]" : "\n  ]") << ",\n";

  os << "  \"f_symbols\": [";
  first = true;
  for (const auto& [k, v] : cat.f_table().entries()) {  // std::map: sorted by key
    const bool unit_leg = (k[0] == one || k[1] == one || k[2] == one);
    if (unit_leg && std::abs(v - Complex{1.0}) <= 1e-12) continue;  // gauge-fixed, implied
    os << (first ? "\n" : ",\n") << "    {\"a\": " << k[0] << ", \"b\": " << k[1]
       << ", \"c\": " << k[2] << ", \"d\": " << k[3] << ", \"e\": " << k[4] << ", \"f\": " << k[5]
       << ", \"value\": " << json_complex(v) << "}";
    first = false;
  }
  os << (first ? "]" : "\n  ]") << ",\n";

  os << "  \"r_symbols\": [";
  first = true;
  for (const auto& [k, v] : cat.r_table().entries()) {
    const bool unit_leg = (k[0] == one || k[1] == one);
    if (unit_leg && std::abs(v - Complex{1.0}) <= 1e-12) continue;
    os << (first ? "\n" : ",\n") << "    {\"a\": " << k[0] << ", \"b\": " << k[1]
       << ", \"c\": " << k[2] << ", \"value\": " << json_complex(v) << "}";
    first = false;
  }
  os << (first ? "]" : "\n  ]") << ",\n";

  os << "  \"twists\": [";
  for (int a = 0; a < cat.num_objects(); ++a)
    os << (a ? ",\n" : "\n") << "    {\"a\": " << a << ", \"value\": " << json_complex(cat.twist(a))
       << "}";
  os << "\n  ]\n";
  os << "}\n";
  return os.str();
}

/** Write save_category(cat) to a file. @throws UsageError on IO failure. */
inline void save_category_file(const RibbonCategory& cat, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << save_category(cat);
  if (!out) throw UsageError("failed while writing '" + path + "'");
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                           const std::string& source) {
  auto it = j.find(key);
  if (it == j.end()) throw DataError(source + ": missing required field \"" + key + "\"");
  return *it;
}

inline int require_id(const nlohmann::json& j, const char* what, int num_objects,
                      const std::string& source) {
  if (!j.is_number_integer())
    throw DataError(source + ": " + what + " must be an integer object id");
  const long long v = j.get<long long>();
  if (v < 0 || v >= num_objects)
    throw DataError(source + ": " + what + " " + std::to_string(v) + " is outside 0.." +
                    std::to_string(num_objects - 1));
  return static_cast<int>(v);
}

inline Complex require_complex(const nlohmann::json& j, const std::string& source) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DataError(source + ": \"value\" must be a two-element [re, im] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

/**
 * @brief Parse and assemble a category from file-format text.
 *
 * Structural problems (wrong format marker, out-of-range ids, duplicate
 * fusion triples or symbol records, missing twists) raise DataError; JSON
 * syntax errors raise UsageError. Full mathematical validation is a separate
 * step (validate_structure / verify_pentagon / verify_hexagon).
 */
inline RibbonCategory load_category(const std::string& text,
                                    const std::string& source = "<string>") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(source + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw DataError(source + ": top level must be an object");
  const auto& format = detail::require_field(j, "format", source);
  if (!format.is_string() || format.get<std::string>() != kCategoryFormat)
    throw DataError(source + ": unsupported format (expected \"" + kCategoryFormat + "\")");

  std::string name;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();

  const auto& jobjects = detail::require_field(j, "objects", source);
  if (!jobjects.is_array() || jobjects.empty())
    throw DataError(source + ": \"objects\" must be a non-empty array of names");
  std::vector<std::string> names;
  for (const auto& o : jobjects) {
    if (!o.is_string()) throw DataError(source + ": object names must be strings");
    names.push_back(o.get<std::string>());
  }
  const int num = static_cast<int>(names.size());

  const ObjId unit = detail::require_id(detail::require_field(j, "unit", source), "unit", num, source);

  const auto& jdual = detail::require_field(j, "dual", source);
  if (!jdual.is_array() || static_cast<int>(jdual.size()) != num)
    throw DataError(source + ": \"dual\" must list exactly one id per object");
  std::vector<ObjId> dual;
  for (const auto& d : jdual) dual.push_back(detail::require_id(d, "dual entry", num, source));

  const auto& jfusion = detail::require_field(j, "fusion", source);
  if (!jfusion.is_array()) throw DataError(source + ": \"fusion\" must be an array of triples");
  std::set<std::array<ObjId, 3>> triples;
  for (const auto& t : jfusion) {
    if (!t.is_array() || t.size() != 3)
      throw DataError(source + ": each fusion entry must be a triple [a, b, c]");
    std::array<ObjId, 3> key{detail::require_id(t[0], "fusion label", num, source),
                             detail::require_id(t[1], "fusion label", num, source),
                             detail::require_id(t[2], "fusion label", num, source)};
    if (!triples.insert(key).second)
      throw DataError(source + ": duplicate fusion triple (" + std::to_string(key[0]) + "," +
                      std::to_string(key[1]) + "," + std::to_string(key[2]) +
                      "): multiplicity-free data admits each triple at most once");
  }
  const FusionRules rules(num, unit, dual, triples);

  const auto& jf = detail::require_field(j, "f_symbols", source);
  if (!jf.is_array()) throw DataError(source + ": \"f_symbols\" must be an array");
  FSymbolTable f;
  for (const auto& rec : jf) {
    if (!rec.is_object()) throw DataError(source + ": F-symbol entries must be objects");
    FKey key{};
    const char* fields[6] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 6; ++i)
      key[static_cast<std::size_t>(i)] =
          detail::require_id(detail::require_field(rec, fields[i], source), "F label", num, source);
    if (f.contains(key)) throw DataError(source + ": duplicate F-symbol record");
    f.set(key, detail::require_complex(detail::require_field(rec, "value", source), source));
  }

  const auto& jr = detail::require_field(j, "r_symbols", source);
  if (!jr.is_array()) throw DataError(source + ": \"r_symbols\" must be an array");
  RSymbolTable r;
  for (const auto& rec : jr) {
    if (!rec.is_object()) throw DataError(source + ": R-symbol entries must be objects");
    RKey key{detail::require_id(detail::require_field(rec, "a", source), "R label", num, source),
             detail::require_id(detail::require_field(rec, "b", source), "R label", num, source),
             detail::require_id(detail::require_field(rec, "c", source), "R label", num, source)};
    if (r.contains(key)) throw DataError(source + ": duplicate R-symbol record");
    r.set(key, detail::require_complex(detail::require_field(rec, "value", source), source));
  }

  const auto& jt = detail::require_field(j, "twists", source);
  if (!jt.is_array()) throw DataError(source + ": \"twists\" must be an array");
  std::vector<Complex> twists(static_cast<std::size_t>(num));
  std::vector<bool> seen(static_cast<std::size_t>(num), false);
  for (const auto& rec : jt) {
    if (!rec.is_object()) throw DataError(source + ": twist entries must be objects");
    const int a =
        detail::require_id(detail::require_field(rec, "a", source), "twist label", num, source);
    if (seen[static_cast<std::size_t>(a)])
      throw DataError(source + ": duplicate twist for object " + std::to_string(a));
    seen[static_cast<std::size_t>(a)] = true;
    twists[static_cast<std::size_t>(a)] =
        detail::require_complex(detail::require_field(rec, "value", source), source);
  }
  for (int a = 0; a < num; ++a)
    if (!seen[static_cast<std::size_t>(a)])
      throw DataError(source + ": missing twist for object " + std::to_string(a));

  // Gauge-fixed unit-leg entries may be omitted; fill the admissible ones.
  for (ObjId a = 0; a < num; ++a)
    for (ObjId b = 0; b < num; ++b)
      for (ObjId c = 0; c < num; ++c) {
        if (a != unit && b != unit && c != unit) continue;
        for (ObjId e : rules.channels(a, b))
          for (ObjId ff : rules.channels(b, c))
            for (ObjId d : rules.channels(e, c)) {
              if (!rules.admissible(a, ff, d)) continue;
              const FKey key{a, b, c, d, e, ff};
              if (!f.contains(key)) f.set(key, Complex{1.0});
            }
      }
  for (ObjId a = 0; a < num; ++a)
    for (ObjId b = 0; b < num; ++b) {
      if (a != unit && b != unit) continue;
      for (ObjId c : rules.channels(a, b)) {
        const RKey key{a, b, c};
        if (!r.contains(key)) r.set(key, Complex{1.0});
      }
    }

  return RibbonCategory::assemble(std::move(name), std::move(names), unit, std::move(dual),
                                  std::move(triples), std::move(f), std::move(r),
                                  std::move(twists));
}

/** Load a category file from disk. @throws UsageError on IO failure. */
inline RibbonCategory load_category_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open category file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_category(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Structured (JSON) rendering of matrices, bases, and reports
// ---------------------------------------------------------------------------

/** Dense matrix as {"rows": R, "cols": C, "entries": [[[re,im],...],...]}. */
inline std::string json_matrix(const Mat& m) {
  std::ostringstream os;
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"entries\": [";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", " : "") << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << json_complex(m.at(r, c));
    os << "]";
  }
  os << "]}";
  return os.str();
}

/** Paired basis as a list of {"a": [names...], "b": [names...]} trees. */
inline std::string json_paired_basis(const RibbonCategory& cat, const PairedBasis& basis) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const PairedFusionTree& t = basis.trees[i];
    os << (i ? ", " : "") << "{\"a\": [";
    for (std::size_t k = 0; k < t.a.size(); ++k)
      os << (k ? ", " : "") << json_escape(cat.name_of(t.a[k]));
    os << "], \"b\": [";
    for (std::size_t k = 0; k < t.b.size(); ++k)
      os << (k ? ", " : "") << json_escape(cat.name_of(t.b[k]));
    os << "]}";
  }
  os << "]";
  return os.str();
}

inline std::string json_relation_report(const RelationReport& r) {
  std::ostringstream os;
  os << "{\"tolerance\": " << format_double(r.tolerance) << ", \"pass\": "
     << (r.pass ? "true" : "false") << ", \"families\": {";
  bool first = true;
  for (const auto& [fam, mx] : r.family_max) {
    os << (first ? "" : ", ") << json_escape(fam) << ": {\"max_residual\": " << format_double(mx)
       << ", \"pass\": " << (r.family_pass.at(fam) ? "true" : "false") << "}";
    first = false;
  }
  os << "}, \"instances\": [";
  for (std::size_t i = 0; i < r.instances.size(); ++i) {
    const RelationCheck& c = r.instances[i];
    os << (i ? ", " : "") << "{\"family\": " << json_escape(c.family) << ", \"indices\": [";
    for (std::size_t k = 0; k < c.indices.size(); ++k) os << (k ? ", " : "") << c.indices[k];
    os << "], \"residual\": " << format_double(c.residual) << "}";
  }
  os << "]}";
  return os.str();
}

inline std::string json_double_braiding(const RibbonCategory& cat, const DoubleBraidingReport& r) {
  std::ostringstream os;
  os << "{\"trivial\": " << (r.trivial ? "true" : "false")
     << ", \"max_residual\": " << format_double(r.max_residual)
     << ", \"tolerance\": " << format_double(r.tolerance) << ", \"witness\": "
     << (r.witness >= 0 ? json_escape(cat.name_of(r.witness)) : std::string("null"))
     << ", \"checked\": [";
  for (std::size_t i = 0; i < r.checked.size(); ++i)
    os << (i ? ", " : "") << "{\"charge\": " << json_escape(cat.name_of(r.checked[i].first))
       << ", \"residual\": " << format_double(r.checked[i].second) << "}";
  os << "], \"sufficient_condition\": " << (r.sufficient_condition ? "true" : "false")
     << ", \"summands\": [";
  for (std::size_t i = 0; i < r.summand_classes.size(); ++i)
    os << (i ? ", " : "")
       << "{\"object\": " << json_escape(cat.name_of(r.summand_classes[i].first))
       << ", \"class\": " << json_escape(to_string(r.summand_classes[i].second)) << "}";
  os << "]}";
  return os.str();
}

inline std::string json_equivalence_report(const EquivalenceReport& r) {
  std::ostringstream os;
  os << "{\"tolerance\": " << format_double(r.tolerance)
     << ", \"max_difference\": " << format_double(r.max_difference)
     << ", \"pass\": " << (r.pass ? "true" : "false") << ", \"generators\": [";
  for (std::size_t i = 0; i < r.differences.size(); ++i)
    os << (i ? ", " : "") << "{\"name\": " << json_escape(r.differences[i].first)
       << ", \"difference\": " << format_double(r.differences[i].second) << "}";
  os << "]}";
  return os.str();
}

inline std::string json_coherence_report(const CoherenceReport& r) {
  std::ostringstream os;
  os << "{\"instances_checked\": " << r.instances_checked
     << ", \"max_residual\": " << format_double(r.max_residual)
     << ", \"tolerance\": " << format_double(r.tolerance)
     << ", \"violation_count\": " << r.violation_count << ", \"pass\": "
     << (r.pass() ? "true" : "false") << ", \"violations\": [";
  for (std::size_t i = 0; i < r.violations.size(); ++i)
    os << (i ? ", " : "") << "{\"equation\": " << json_escape(r.violations[i].equation)
       << ", \"labels\": " << json_escape(r.violations[i].labels)
       << ", \"residual\": " << format_double(r.violations[i].residual) << "}";
  os << "]}";
  return os.str();
}

inline std::string json_validation_report(const ValidationReport& r) {
  std::ostringstream os;
  os << "{\"pass\": " << (r.ok() ? "true" : "false") << ", \"issues\": [";
  for (std::size_t i = 0; i < r.issues.size(); ++i)
    os << (i ? ", " : "") << "{\"code\": " << json_escape(r.issues[i].code)
       << ", \"detail\": " << json_escape(r.issues[i].detail) << "}";
  os << "]}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Human rendering
// ---------------------------------------------------------------------------

/** Short float rendering for terminal reports (residuals, tolerances). */
inline std::string human_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

/** One complex entry as "re+imi" with 6 significant digits. */
inline std::string human_complex(Complex v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real(), v.imag());
  return buf;
}

/** Aligned rows of complex entries. */
inline std::string human_matrix(const Mat& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(human_complex(m.at(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      os << (c ? "  " : " ") << std::string(width - cell.size(), ' ') << cell;
    }
    os << " ]\n";
  }
  return os.str();
}

inline std::string human_paired_basis(const RibbonCategory& cat, const PairedBasis& basis) {
  std::ostringstream os;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const PairedFusionTree& t = basis.trees[i];
    os << "  [" << i << "] a = (";
    for (std::size_t k = 0; k < t.a.size(); ++k) os << (k ? ", " : "") << cat.name_of(t.a[k]);
    os << "), products = (";
    for (std::size_t k = 0; k < t.b.size(); ++k) os << (k ? ", " : "") << cat.name_of(t.b[k]);
    os << ")\n";
  }
  return os.str();
}

inline std::string human_relation_report(const RelationReport& r) {
  std::ostringstream os;
  os << "relations (tolerance " << human_double(r.tolerance) << "): "
     << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [fam, mx] : r.family_max)
    os << "  " << (r.family_pass.at(fam) ? "pass" : "FAIL") << "  " << fam
       << "  max residual " << human_double(mx) << "\n";
  return os.str();
}

inline std::string human_double_braiding(const RibbonCategory& cat,
                                         const DoubleBraidingReport& r) {
  std::ostringstream os;
  os << "double braiding of x (x) y: " << (r.trivial ? "TRIVIAL" : "NONTRIVIAL")
     << " (max residual " << human_double(r.max_residual) << ")";
  if (!r.trivial && r.witness >= 0) os << ", witness charge " << cat.name_of(r.witness);
  os << "\n";
  os << "  boson/fermion sufficient condition: "
     << (r.sufficient_condition ? "holds" : "does not hold") << "\n";
  for (const auto& [obj, cls] : r.summand_classes)
    os << "  summand " << cat.name_of(obj) << ": " << to_string(cls) << "\n";
  return os.str();
}

inline std::string human_coherence_report(const std::string& label, const CoherenceReport& r) {
  std::ostringstream os;
  os << label << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.instances_checked
     << " instances, max residual " << human_double(r.max_residual) << ")\n";
  for (const CoherenceViolation& v : r.violations)
    os << "  violated " << v.equation << " at " << v.labels << " (residual "
       << human_double(v.residual) << ")\n";
  return os.str();
}

inline std::string human_validation_report(const ValidationReport& r) {
  std::ostringstream os;
  os << "structure: " << (r.ok() ? "PASS" : "FAIL") << "\n";
  for (const ValidationIssue& i : r.issues) os << "  [" << i.code << "] " << i.detail << "\n";
  return os.str();
}

}  // namespace loopbraid
