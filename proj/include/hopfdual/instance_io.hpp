#pragma once

/**
 * @file instance_io.hpp
 * @brief JSON instance files.
 *
 * Ring elements are strings: decimal integers, "p/q" over Q, residues over
 * Z/n. Structure constants are sparse lists; unlisted entries are zero.
 *
 *   mult     [i, j, k, c]   b_i b_j has coefficient c at b_k
 *   comult   [i, j, k, c]   Delta(b_i) has coefficient c at b_j (x) b_k
 *   antipode [i, j, c]      S(b_i) has coefficient c at b_j
 *   action   [h, a, b, c]   h . a_a has coefficient c at a_b
 *   cocycle  [h, k, a, c]   sigma(h, k) has coefficient c at a_a
 *   coaction [b, b', h, c]  rho(b) has coefficient c at b' (x) h
 *   integral [h, b, c]      theta(h) has coefficient c at b
 */

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfdual/suite.hpp"

namespace hopfdual {

struct InstanceFile {
  CatalogEntry entry;
  Suite suite = Suite::All;
};

namespace io {

using nlohmann::json;

[[noreturn]] inline void parse_error(const std::string& where, const std::string& what) {
  fail(ErrorKind::ParseError, where + ": " + what);
}

[[noreturn]] inline void invalid(const std::string& where, const std::string& what) {
  fail(ErrorKind::ValidationError, where + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, "missing field '" + key + "'");
  return *it;
}

inline std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where, "expected a string");
  return j.get<std::string>();
}

inline Scalar scalar_of(const Ring& ring, const json& j, const std::string& where) {
  std::string s = string_of(j, where);
  try {
    return ring.parse_element(s);
  } catch (const Error&) {
    invalid(where, "'" + s + "' is not an element of " + ring.name());
  }
}

inline std::size_t index_of(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_error(where, "expected a non-negative integer index");
  return j.get<std::size_t>();
}

inline Vector vector_of(const Ring& ring, const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array");
  if (j.size() != rank) invalid(where, "expected " + std::to_string(rank) + " entries, got " + std::to_string(j.size()));
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_of(ring, j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

/// Reads [i_1, ..., i_k, c] records into a matrix with the given column
/// index, after range-checking every index against `bounds`.
template <class Place>
Matrix sparse_of(const Ring& ring, const json& j, const std::vector<std::size_t>& bounds, std::size_t rows,
                 std::size_t cols, const std::string& where, Place place) {
  if (!j.is_array()) parse_error(where, "expected an array of records");
  Matrix m(rows, cols);
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string w = where + "[" + std::to_string(n) + "] = " + j[n].dump();
    if (!j[n].is_array() || j[n].size() != bounds.size() + 1)
      parse_error(w, "expected " + std::to_string(bounds.size()) + " indices and a coefficient");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      std::size_t i = index_of(j[n][k], w);
      if (i >= bounds[k]) invalid(w, "index " + std::to_string(i) + " out of range (rank " + std::to_string(bounds[k]) + ")");
      idx.push_back(i);
    }
    auto [r, c] = place(idx);
    m(r, c) = ring.add(m(r, c), scalar_of(ring, j[n].back(), w));
  }
  return m;
}

inline json scalar_json(const Ring& ring, const Scalar& x) { return ring.format(ring.normalize(x)); }

inline json vector_json(const Ring& ring, const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(ring, x));
  return out;
}

/// Nonzero entries of m as records, column-major, with the column index
/// split by `split`.
template <class Split>
json sparse_json(const Ring& ring, const Matrix& m, Split split) {
  json out = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        json rec = split(r, c);
        rec.push_back(scalar_json(ring, m(r, c)));
        out.push_back(rec);
      }
  return out;
}

inline FreeModule module_of(const Ring& ring, const json& j, const std::string& where) {
  const json& b = field(j, "basis", where);
  if (!b.is_array() || b.empty()) parse_error(where + ".basis", "expected a non-empty array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.size(); ++i) labels.push_back(string_of(b[i], where + ".basis[" + std::to_string(i) + "]"));
  return FreeModule(ring, labels);
}

inline AlgebraData algebra_of(const Ring& ring, const json& j, const std::string& where) {
  FreeModule m = module_of(ring, j, where);
  const std::size_t n = m.rank();
  Matrix mult = sparse_of(ring, field(j, "mult", where), {n, n, n}, n, n * n, where + ".mult",
                          [n](const std::vector<std::size_t>& i) { return std::pair{i[2], i[0] * n + i[1]}; });
  return AlgebraData(m, mult, vector_of(ring, field(j, "unit", where), n, where + ".unit"));
}

inline json algebra_json(const AlgebraData& a) {
  const std::size_t n = a.rank();
  return {{"basis", a.carrier().labels()},
          {"unit", vector_json(a.ring(), a.unit())},
          {"mult", sparse_json(a.ring(), a.mult().matrix(), [n](std::size_t r, std::size_t c) {
             return json{c / n, c % n, r};
           })}};
}

inline json hopf_json(const HopfData& h, const std::optional<LinearMap>& antipode) {
  const std::size_t n = h.rank();
  json j = algebra_json(h.algebra());
  j["counit"] = vector_json(h.ring(), h.coalgebra().counit());
  j["comult"] = sparse_json(h.ring(), h.coalgebra().comult().matrix(),
                            [n](std::size_t r, std::size_t c) { return json{c, r / n, r % n}; });
  j["antipode"] = sparse_json(h.ring(), (antipode ? *antipode : h.antipode()).matrix(),
                              [](std::size_t r, std::size_t c) { return json{c, r}; });
  return j;
}

inline std::string side_name(Side s) { return to_string(s); }

inline Side side_of(const json& j, const std::string& where) {
  std::string s = string_of(j, where);
  if (s == "right") return Side::Right;
  if (s == "left") return Side::Left;
  parse_error(where, "side must be 'right' or 'left'");
}

inline std::vector<Vector> vectors_of(const Ring& ring, const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_of(ring, j[i], rank, where + "[" + std::to_string(i) + "]"));
  return out;
}

/// Turns library errors raised while assembling the payload into input
/// errors that name the block.
template <class Fn>
auto building(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    invalid(where, e.what());
  }
}

/// Indented JSON with arrays of scalars kept on one line, so that each
/// structure-constant record reads as one line.
inline void pretty(std::ostream& os, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' '), inner(static_cast<std::size_t>(2 * depth + 2), ' ');
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_primitive(); });
  };
  if (j.is_array() && (j.empty() || flat(j))) {
    os << j.dump();
  } else if (j.is_array()) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      pretty(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << inner << json(it.key()).dump() << ": ";
      pretty(os, it.value(), depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else {
    os << j.dump();
  }
}

inline std::string pretty(const json& j) {
  std::ostringstream os;
  pretty(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace io

/// The instance document for an entry.
inline nlohmann::json export_entry(const CatalogEntry& e, Suite suite = Suite::All) {
  using nlohmann::json;
  const Ring& ring = e.ring();
  const std::size_t n = e.hopf.rank();
  json j;
  j["name"] = e.name;
  j["description"] = e.description;
  j["ring"] = ring.name();
  j["suite"] = to_string(suite);
  j["hopf"] = io::hopf_json(e.hopf, e.supplied_antipode);
  json sides = json::array();
  for (Side s : e.sides) sides.push_back(io::side_name(s));
  j["sides"] = sides;
  j["iso_suites"] = e.iso_suites;
  if (e.crossed) {
    const AlgebraData& a = e.crossed->algebra();
    const std::size_t r = a.rank();
    j["algebra"] = io::algebra_json(a);
    j["action"] = io::sparse_json(ring, e.crossed->action.action.matrix(),
                                  [r](std::size_t row, std::size_t c) { return json{c / r, c % r, row}; });
    j["cocycle"] = io::sparse_json(ring, e.crossed->cocycle.sigma.matrix(),
                                   [n](std::size_t row, std::size_t c) { return json{c / n, c % n, row}; });
  }
  if (e.cleft) {
    const AlgebraData& b = e.cleft->comodule.algebra;
    json c;
    c["algebra"] = io::algebra_json(b);
    c["coaction"] = io::sparse_json(ring, e.cleft->comodule.coaction.matrix(),
                                    [n](std::size_t row, std::size_t col) { return json{col, row / n, row % n}; });
    c["integral"] = io::sparse_json(ring, e.cleft->theta.matrix(),
                                    [](std::size_t row, std::size_t col) { return json{col, row}; });
    c["integral_inverse"] = io::sparse_json(ring, e.cleft->theta_inv.matrix(),
                                            [](std::size_t row, std::size_t col) { return json{col, row}; });
    j["cleft"] = c;
  }
  if (!e.u.empty()) {
    json u;
    for (const auto& [side, gens] : e.u) {
      json vs = json::array();
      for (const auto& g : gens) vs.push_back(io::vector_json(ring, g));
      u[io::side_name(side)] = vs;
    }
    j["U"] = u;
  }
  if (e.v) {
    json vs = json::array();
    for (const auto& g : *e.v) vs.push_back(io::vector_json(ring, g));
    j["V"] = vs;
  }
  json ex = json::array();
  for (const auto& x : e.expected) ex.push_back({{"suite", x.suite}, {"passes", x.passes}, {"source", x.source}});
  j["expected"] = ex;
  return j;
}

inline InstanceFile parse_instance_json(const nlohmann::json& j) {
  using nlohmann::json;
  InstanceFile out;
  CatalogEntry& e = out.entry;
  if (!j.is_object()) io::parse_error("instance", "expected a JSON object");
  e.name = io::string_of(io::field(j, "name", "instance"), "name");
  if (j.contains("description")) e.description = io::string_of(j["description"], "description");
  if (j.contains("suite")) out.suite = parse_suite(io::string_of(j["suite"], "suite"));

  const std::string ring_text = io::string_of(io::field(j, "ring", "instance"), "ring");
  Ring ring = [&] {
    try {
      return Ring::parse(ring_text);
    } catch (const Error&) {
      io::parse_error("ring", "unknown ring '" + ring_text + "' (use Z, Q or Z/n)");
    }
  }();

  // H
  const json& hj = io::field(j, "hopf", "instance");
  AlgebraData ha = io::algebra_of(ring, hj, "hopf");
  const std::size_t n = ha.rank();
  Matrix comult = io::sparse_of(ring, io::field(hj, "comult", "hopf"), {n, n, n}, n * n, n, "hopf.comult",
                                [n](const std::vector<std::size_t>& i) { return std::pair{i[1] * n + i[2], i[0]}; });
  Vector counit = io::vector_of(ring, io::field(hj, "counit", "hopf"), n, "hopf.counit");
  BialgebraData b = io::building("hopf", [&] { return BialgebraData(ha, CoalgebraData(ha.carrier(), comult, counit)); });
  e.hopf = io::building("hopf", [&] { return make_hopf(b); });
  if (hj.contains("antipode")) {
    Matrix s = io::sparse_of(ring, hj["antipode"], {n, n}, n, n, "hopf.antipode",
                             [](const std::vector<std::size_t>& i) { return std::pair{i[1], i[0]}; });
    e.supplied_antipode = LinearMap(ha.carrier(), ha.carrier(), s);
  }

  // A, action, sigma
  const bool has_action = j.contains("action"), has_cocycle = j.contains("cocycle"), has_algebra = j.contains("algebra");
  if (has_cocycle && !has_action) io::invalid("cocycle", "missing action");
  if ((has_action || has_cocycle) && !has_algebra) io::invalid("action", "missing algebra");
  if (has_algebra && !has_action) io::invalid("algebra", "missing action");
  if (has_action) {
    AlgebraData a = io::algebra_of(ring, j["algebra"], "algebra");
    const std::size_t r = a.rank();
    Matrix act = io::sparse_of(ring, j["action"], {n, r, r}, r, n * r, "action",
                               [r](const std::vector<std::size_t>& i) { return std::pair{i[2], i[0] * r + i[1]}; });
    WeakActionData w{b, a, LinearMap(tensor(ha.carrier(), a.carrier()), a.carrier(), act)};
    LinearMap sigma = has_cocycle
                          ? LinearMap(tensor(ha.carrier(), ha.carrier()), a.carrier(),
                                      io::sparse_of(ring, j["cocycle"], {n, n, r}, r, n * n, "cocycle",
                                                    [n](const std::vector<std::size_t>& i) {
                                                      return std::pair{i[2], i[0] * n + i[1]};
                                                    }))
                          : trivial_cocycle(b, a);
    e.kind = PayloadKind::Crossed;
    e.crossed = io::building("crossed product", [&] { return build_crossed_product(w, sigma); });
  }

  if (j.contains("cleft")) {
    if (has_action) io::invalid("cleft", "give either a crossed product or a cleft extension, not both");
    const json& cj = j["cleft"];
    AlgebraData bb = io::algebra_of(ring, io::field(cj, "algebra", "cleft"), "cleft.algebra");
    const std::size_t rb = bb.rank();
    Matrix co = io::sparse_of(ring, io::field(cj, "coaction", "cleft"), {rb, rb, n}, rb * n, rb, "cleft.coaction",
                              [n](const std::vector<std::size_t>& i) { return std::pair{i[1] * n + i[2], i[0]}; });
    auto integral = [&](const char* key) {
      return LinearMap(ha.carrier(), bb.carrier(),
                       io::sparse_of(ring, io::field(cj, key, "cleft"), {n, rb}, rb, n, std::string("cleft.") + key,
                                     [](const std::vector<std::size_t>& i) { return std::pair{i[1], i[0]}; }));
    };
    ComoduleAlgebraData cm{b, bb, LinearMap(bb.carrier(), tensor(bb.carrier(), ha.carrier()), co)};
    e.kind = PayloadKind::Cleft;
    e.cleft = CleftData{e.hopf, cm, integral("integral"), integral("integral_inverse")};
  }

  if (j.contains("sides")) {
    const json& sj = j["sides"];
    if (!sj.is_array() || sj.empty()) io::parse_error("sides", "expected a non-empty array");
    e.sides.clear();
    for (std::size_t i = 0; i < sj.size(); ++i) e.sides.push_back(io::side_of(sj[i], "sides[" + std::to_string(i) + "]"));
  }
  if (j.contains("iso_suites")) {
    if (!j["iso_suites"].is_boolean()) io::parse_error("iso_suites", "expected a boolean");
    e.iso_suites = j["iso_suites"].get<bool>();
  }
  if (j.contains("U")) {
    const json& uj = j["U"];
    if (!uj.is_object()) io::parse_error("U", "expected an object keyed by side");
    for (auto it = uj.begin(); it != uj.end(); ++it) {
      Side s = io::side_of(json(it.key()), "U");
      e.u[s] = io::vectors_of(ring, it.value(), n, "U." + it.key());
    }
  }
  if (j.contains("V")) e.v = io::vectors_of(ring, j["V"], n, "V");
  if (j.contains("expected")) {
    const json& xj = j["expected"];
    if (!xj.is_array()) io::parse_error("expected", "expected an array");
    for (std::size_t i = 0; i < xj.size(); ++i) {
      const std::string w = "expected[" + std::to_string(i) + "]";
      Expectation x;
      x.suite = io::string_of(io::field(xj[i], "suite", w), w + ".suite");
      parse_suite(x.suite);
      const json& p = io::field(xj[i], "passes", w);
      if (!p.is_boolean()) io::parse_error(w + ".passes", "expected a boolean");
      x.passes = p.get<bool>();
      if (xj[i].contains("source")) x.source = io::string_of(xj[i]["source"], w + ".source");
      e.expected.push_back(x);
    }
  }

  ValidationReport r = validate_entry(e);
  if (!r.passed()) io::invalid("instance", r.first_failure());
  return out;
}

inline InstanceFile parse_instance_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    io::parse_error("json", ex.what());
  }
  return parse_instance_json(j);
}

inline InstanceFile parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot read file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance_text(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
}

inline void write_instance(const CatalogEntry& e, const std::string& path, Suite suite = Suite::All) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, path + ": cannot write file");
  out << io::pretty(export_entry(e, suite));
}

/// Structural equality of two entries: names, payload structure constants,
/// selections and expectations.
inline bool same_entry(const CatalogEntry& a, const CatalogEntry& b) {
  auto same_cp = [](const CrossedProductData& x, const CrossedProductData& y) {
    return x.bialgebra() == y.bialgebra() && x.algebra() == y.algebra() && x.action.action == y.action.action &&
           x.cocycle.sigma == y.cocycle.sigma;
  };
  auto same_cleft = [](const CleftData& x, const CleftData& y) {
    return x.comodule.algebra == y.comodule.algebra && x.comodule.coaction == y.comodule.coaction &&
           x.theta == y.theta && x.theta_inv == y.theta_inv;
  };
  if (a.name != b.name || a.description != b.description || a.kind != b.kind) return false;
  if (!(a.hopf.bialgebra() == b.hopf.bialgebra()) || !(a.hopf.antipode() == b.hopf.antipode())) return false;
  if (a.crossed.has_value() != b.crossed.has_value() || (a.crossed && !same_cp(*a.crossed, *b.crossed))) return false;
  if (a.cleft.has_value() != b.cleft.has_value() || (a.cleft && !same_cleft(*a.cleft, *b.cleft))) return false;
  if (a.sides != b.sides || a.u != b.u || a.v != b.v || a.iso_suites != b.iso_suites) return false;
  if (a.expected.size() != b.expected.size()) return false;
  for (std::size_t i = 0; i < a.expected.size(); ++i)
    if (a.expected[i].suite != b.expected[i].suite || a.expected[i].passes != b.expected[i].passes ||
        a.expected[i].source != b.expected[i].source)
      return false;
  return true;
}

}  // namespace hopfdual
