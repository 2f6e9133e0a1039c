#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in instances: group algebras and their duals, twisted group
 * algebras, smash products with module algebras, and Sweedler's algebra.
 */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfdual/theorem.hpp"

namespace hopfdual {

// ---------------------------------------------------------------------------
// building blocks

/// R^n with orthogonal idempotents p0, p1, ...
inline AlgebraData idempotent_algebra(const Ring& ring, std::size_t n) {
  return AlgebraData::from_products(
      FreeModule::indexed(ring, n, "p"),
      [n](std::size_t i, std::size_t j) { return i == j ? unit_vector(n, i) : Vector(n); },
      Vector(n, Scalar(1)));
}

/// R[t]/(t^n), basis 1, t, t2, ...
inline AlgebraData truncated_polynomials(const Ring& ring, std::size_t n) {
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "t" : "t" + std::to_string(i));
  return AlgebraData::from_products(
      FreeModule(ring, labels), [n](std::size_t i, std::size_t j) { return i + j < n ? unit_vector(n, i + j) : Vector(n); },
      unit_vector(n, 0));
}

/// The generator g of C_n moves p_i to p_{i+1 mod m}.
inline LinearMap cyclic_shift_action(const BialgebraData& h, const AlgebraData& a) {
  const std::size_t m = a.rank();
  Matrix act(m, h.rank() * m);
  for (std::size_t x = 0; x < h.rank(); ++x)
    for (std::size_t i = 0; i < m; ++i) act((i + x) % m, x * m + i) = 1;
  return LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), act);
}

/// Normal sigma on a group algebra: 1_A everywhere except the listed
/// (x, y, c), where sigma(x, y) = c 1_A.
inline LinearMap group_cocycle(const BialgebraData& h, const AlgebraData& a,
                               const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& values) {
  const std::size_t n = h.rank();
  Matrix m(a.rank(), n * n);
  for (std::size_t i = 0; i < n * n; ++i) m.set_column(i, a.unit());
  for (const auto& [x, y, c] : values) m.set_column(x * n + y, detail::scaled(a.ring(), a.unit(), c));
  return LinearMap(tensor(h.carrier(), h.carrier()), a.carrier(), m);
}

/// sigma(x, y) = u(x) u(y) / u(xy) for a unit-valued u on C_n with u(e) = 1.
inline LinearMap group_coboundary(const BialgebraData& h, const AlgebraData& a, const std::vector<Scalar>& u) {
  const std::size_t n = h.rank();
  const Ring& ring = a.ring();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> values;
  for (std::size_t x = 1; x < n; ++x)
    for (std::size_t y = 1; y < n; ++y)
      values.emplace_back(x, y, ring.mul(ring.mul(u[x], u[y]), ring.inverse(u[(x + y) % n])));
  return group_cocycle(h, a, values);
}

/// R[t]/(t^2) as an H4-module algebra: g.t = -t, x.1 = 0, x.t = 1.
inline WeakActionData sweedler_module(const Ring& ring) {
  BialgebraData h = sweedler_bialgebra(ring);
  AlgebraData a = truncated_polynomials(ring, 2);
  Matrix act(2, 8);
  act(0, 0) = act(1, 1) = 1;
  act(0, 2) = 1;
  act(1, 3) = ring.normalize(Scalar(-1));
  act(0, 5) = 1;
  act(0, 7) = 1;  // gx.t = g.1
  return {h, a, LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), act)};
}

/// C2 acting on M_2(R) by conjugation with diag(1, -1).
inline WeakActionData matrix_conjugation(const Ring& ring) {
  BialgebraData h = cyclic_group_bialgebra(ring, 2);
  AlgebraData a = matrix_algebra(ring, 2);
  Matrix act(4, 8);
  for (std::size_t e = 0; e < 4; ++e) {
    act(e, e) = 1;
    act(e, 4 + e) = ring.normalize(Scalar(e == 1 || e == 2 ? -1 : 1));
  }
  return {h, a, LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), act)};
}

inline CrossedProductData trivial_smash(const HopfData& h) {
  AlgebraData a = scalar_algebra(h.ring());
  CrossedProductData cp = build_crossed_product({h.bialgebra(), a, trivial_action(h.bialgebra(), a)},
                                                trivial_cocycle(h.bialgebra(), a));
  cp.hopf = h;
  return cp;
}

// ---------------------------------------------------------------------------
// entries

enum class PayloadKind { Hopf, Crossed, Cleft };

inline std::string to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::Hopf: return "hopf";
    case PayloadKind::Crossed: return "crossed";
    case PayloadKind::Cleft: return "cleft";
  }
  return "?";
}

/// A suite outcome the entry is known to produce, and how that is known.
struct Expectation {
  std::string suite;
  bool passes = true;
  std::string source;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  PayloadKind kind = PayloadKind::Hopf;
  HopfData hopf;                           // antipodes always computed
  std::optional<LinearMap> supplied_antipode;  // from an instance file, checked not trusted
  std::optional<CrossedProductData> crossed;
  std::optional<CleftData> cleft;
  std::vector<Side> sides{Side::Right, Side::Left};
  std::map<Side, std::vector<Vector>> u;  // generators of U; absent side means H*
  std::optional<std::vector<Vector>> v;   // overrides the coaction preimage
  bool iso_suites = true;                 // false: validators only
  std::vector<Expectation> expected;

  const Ring& ring() const { return hopf.ring(); }

  /// The crossed product the duality suites run on. Hopf entries use R # H.
  CrossedProductData crossed_product() const {
    if (crossed) return *crossed;
    if (cleft) return crossed_from_integral(*cleft).crossed;
    return trivial_smash(hopf);
  }

  SubalgebraU subalgebra(Side side) const {
    auto it = u.find(side);
    if (it == u.end()) return full_dual(hopf, side);
    return make_subalgebra(hopf, it->second, side);
  }

  bool full_dual_u(Side side) const { return u.find(side) == u.end(); }
};

struct EntrySummary {
  std::string name;
  std::string kind;
  std::string ring;
  std::size_t hopf_rank = 0;
  std::string description;
};

/// Every validator that applies to the payload.
inline ValidationReport validate_entry(const CatalogEntry& e) {
  ValidationReport r;
  r.append(validate_hopf(e.hopf), "hopf-");
  if (e.crossed) {
    r.append(validate_crossed_product(*e.crossed));
    r.run("crossed-hopf", "crossed product is over the entry's H", [&]() -> std::optional<std::string> {
      if (!(e.crossed->bialgebra() == e.hopf.bialgebra())) return std::string("bialgebra differs");
      return std::nullopt;
    });
  }
  if (e.cleft) r.append(validate_cleft(*e.cleft), "cleft-");
  for (const auto& [side, gens] : e.u) {
    r.run("U-" + to_string(side), "U is a subalgebra and submodule of H*", [&]() -> std::optional<std::string> {
      ValidationReport s = validate_subalgebra(make_subalgebra(e.hopf, gens, side));
      if (!s.passed()) return s.first_failure();
      return std::nullopt;
    });
  }
  return r;
}

namespace detail {

inline CatalogEntry hopf_entry(std::string name, std::string description, const BialgebraData& b) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.hopf = make_hopf(b);
  return e;
}

inline CatalogEntry crossed_entry(std::string name, std::string description, const WeakActionData& w,
                                  const LinearMap& sigma) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.kind = PayloadKind::Crossed;
  e.crossed = build_crossed_product(w, sigma);
  e.hopf = e.crossed->hopf_or_throw();
  return e;
}

inline std::vector<Expectation> passes(std::initializer_list<std::string> suites, const std::string& source) {
  std::vector<Expectation> out;
  for (const auto& s : suites) out.push_back({s, true, source});
  return out;
}

using Builder = std::function<CatalogEntry()>;

inline const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = [] {
    const Ring z = Ring::integers(), q = Ring::rationals();
    std::vector<std::pair<std::string, Builder>> t;
    auto add = [&t](std::string name, Builder b) { t.emplace_back(std::move(name), std::move(b)); };

    for (std::size_t n : {2, 3, 4}) {
      std::string name = "Z_C" + std::to_string(n);
      add(name, [=] {
        CatalogEntry e = hopf_entry(name, "group algebra Z[C" + std::to_string(n) + "], S(g^i) = g^-i",
                                    cyclic_group_bialgebra(z, n));
        e.expected = passes({"all"}, "closed-form group inverse; full pipeline");
        return e;
      });
    }
    add("Q_C3", [=] {
      CatalogEntry e = hopf_entry("Q_C3", "group algebra Q[C3]", cyclic_group_bialgebra(q, 3));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("Z_C2_dual", [=] {
      CatalogEntry e;
      e.name = "Z_C2_dual";
      e.description = "dual of Z[C2]: functions on C2, a product of two copies of Z";
      e.hopf = dual_hopf(make_hopf(cyclic_group_bialgebra(z, 2)));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("gauss", [=] {
      BialgebraData h = cyclic_group_bialgebra(z, 2);
      AlgebraData a = scalar_algebra(z);
      CatalogEntry e = crossed_entry("gauss", "Z #_sigma Z[C2] with sigma(g, g) = -1, i.e. Z[i]",
                                     {h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, Scalar(-1)}}));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("swap_smash", [=] {
      BialgebraData h = cyclic_group_bialgebra(z, 2);
      AlgebraData a = idempotent_algebra(z, 2);
      CatalogEntry e = crossed_entry("swap_smash", "Z[C2] acting on Z x Z by swapping coordinates, trivial sigma",
                                     {h, a, cyclic_shift_action(h, a)}, trivial_cocycle(h, a));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("swap_gauss", [=] {
      BialgebraData h = cyclic_group_bialgebra(z, 2);
      AlgebraData a = idempotent_algebra(z, 2);
      CatalogEntry e = crossed_entry("swap_gauss", "coordinate swap on Z x Z with sigma(g, g) = -1",
                                     {h, a, cyclic_shift_action(h, a)}, group_cocycle(h, a, {{1, 1, Scalar(-1)}}));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("M2_conj", [=] {
      WeakActionData w = matrix_conjugation(q);
      CatalogEntry e = crossed_entry("M2_conj", "C2 acting on M_2(Q) by conjugation with diag(1, -1)", w,
                                     trivial_cocycle(w.hopf, w.algebra));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("sweedler4_Q", [=] {
      CatalogEntry e = hopf_entry("sweedler4_Q", "Sweedler's H4 over Q; S(x) = -gx, S^2 != id", sweedler_bialgebra(q));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("sweedler4_Z3", [=] {
      CatalogEntry e = hopf_entry("sweedler4_Z3", "Sweedler's H4 over Z/3", sweedler_bialgebra(Ring::integers_mod(3)));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("sweedler4_Z", [=] {
      CatalogEntry e = hopf_entry("sweedler4_Z", "Sweedler's H4 over Z, validators only", sweedler_bialgebra(z));
      e.iso_suites = false;
      e.expected = passes({"hopf"}, "axiom checks");
      return e;
    });
    add("sweedler4_U2", [=] {
      CatalogEntry e = hopf_entry("sweedler4_U2", "H4 over Q with U spanned by the group-likes eps, G* of H4*",
                                  sweedler_bialgebra(q));
      std::vector<Vector> gens{Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                               Vector{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)}};
      e.u[Side::Right] = gens;
      e.u[Side::Left] = gens;
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("sweedler_smash", [=] {
      WeakActionData w = sweedler_module(q);
      CatalogEntry e = crossed_entry("sweedler_smash", "Q[t]/(t^2) # H4 with g.t = -t, x.t = 1",
                                     w, trivial_cocycle(w.hopf, w.algebra));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("Zmod6_C2", [=] {
      const Ring z6 = Ring::integers_mod(6);
      BialgebraData h = cyclic_group_bialgebra(z6, 2);
      AlgebraData a = scalar_algebra(z6);
      CatalogEntry e = crossed_entry("Zmod6_C2", "Z/6 #_sigma Z/6[C2] with sigma(g, g) = 5",
                                     {h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, Scalar(5)}}));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("coboundary_C3_Q", [=] {
      BialgebraData h = cyclic_group_bialgebra(q, 3);
      AlgebraData a = scalar_algebra(q);
      CatalogEntry e = crossed_entry("coboundary_C3_Q", "Q #_sigma Q[C3], sigma the coboundary of u = (1, 2, 3)",
                                     {h, a, trivial_action(h, a)},
                                     group_coboundary(h, a, {Scalar(1), Scalar(2), Scalar(3)}));
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    add("gauss_cleft", [=] {
      BialgebraData h = cyclic_group_bialgebra(z, 2);
      AlgebraData a = scalar_algebra(z);
      CrossedProductData cp = build_crossed_product({h, a, trivial_action(h, a)}, group_cocycle(h, a, {{1, 1, Scalar(-1)}}));
      CatalogEntry e;
      e.name = "gauss_cleft";
      e.description = "Z[i] as a cleft Z[C2]-comodule algebra with integral theta(g) = i";
      e.kind = PayloadKind::Cleft;
      e.hopf = cp.hopf_or_throw();
      e.cleft = integral_from_crossed(cp);
      e.sides = {Side::Right};
      e.expected = passes({"all"}, "full pipeline");
      return e;
    });
    return t;
  }();
  return table;
}

}  // namespace detail

inline std::vector<std::string> entry_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : detail::builders()) out.push_back(name);
  return out;
}

/// Builds and validates an entry. A validator failure is a catalog bug.
inline CatalogEntry get_entry(const std::string& name) {
  for (const auto& [n, build] : detail::builders()) {
    if (n != name) continue;
    CatalogEntry e = build();
    ValidationReport r = validate_entry(e);
    if (!r.passed()) fail(ErrorKind::ValidationError, "catalog entry " + name + ": " + r.first_failure());
    return e;
  }
  fail(ErrorKind::UnknownEntry, name);
}

inline std::vector<EntrySummary> list_entries() {
  std::vector<EntrySummary> out;
  for (const auto& [name, build] : detail::builders()) {
    CatalogEntry e = build();
    out.push_back({e.name, to_string(e.kind), e.ring().name(), e.hopf.rank(), e.description});
  }
  return out;
}

}  // namespace hopfdual
