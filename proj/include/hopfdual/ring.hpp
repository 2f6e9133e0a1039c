#pragma once

/**
 * @file ring.hpp
 * @brief Exact coefficient rings: the integers, the rationals and Z/n.
 *
 * Every element is stored as a GMP rational in canonical form. For the
 * integers and for Z/n the denominator is always 1, and residues mod n live
 * in [0, n). Arithmetic goes through the Ring object so that reduction mod n
 * happens in one place.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hopfdual/error.hpp"

namespace hopfdual {

using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

class Ring {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, Integer(0)); }
  static Ring rationals() { return Ring(Kind::Rationals, Integer(0)); }
  static Ring integers_mod(const Integer& n) {
    require(n >= 2, ErrorKind::InvalidRing, "Z/n needs n >= 2, got " + n.get_str());
    return Ring(Kind::IntegersMod, n);
  }

  /// Accepts "Z", "Q" and "Z/n".
  static Ring parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.size() > 2 && text.substr(0, 2) == "Z/") {
      Integer n;
      if (n.set_str(std::string(text.substr(2)), 10) != 0)
        fail(ErrorKind::InvalidRing, "bad modulus in '" + std::string(text) + "'");
      return integers_mod(n);
    }
    fail(ErrorKind::InvalidRing, "unknown ring '" + std::string(text) + "'");
  }

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_field_of_fractions() const { return kind_ == Kind::Rationals; }

  std::string name() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::IntegersMod: return "Z/" + modulus_.get_str();
    }
    return "?";
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

  /// Brings an arbitrary rational into canonical form; throws if it is not
  /// an element of this ring (a proper fraction over Z or Z/n).
  Scalar normalize(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;
    require(x.get_den() == 1, ErrorKind::InvalidElement,
            x.get_str() + " is not an element of " + name());
    if (kind_ == Kind::Integers) return x;
    return Scalar(reduce(x.get_num()));
  }

  /// In-place variant for the hot loops; values are already integral.
  void reduce_in_place(Scalar& x) const {
    if (kind_ != Kind::IntegersMod) return;
    x = Scalar(reduce(x.get_num()));
  }

  void reduce_in_place(Vector& v) const {
    if (kind_ != Kind::IntegersMod) return;
    for (auto& x : v) reduce_in_place(x);
  }

  Scalar add(const Scalar& a, const Scalar& b) const { return fix(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return fix(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return fix(a * b); }
  Scalar neg(const Scalar& a) const { return fix(-a); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return fix(Scalar(v)); }

  bool is_unit(const Scalar& a) const {
    switch (kind_) {
      case Kind::Rationals: return a != 0;
      case Kind::Integers: return a == 1 || a == -1;
      case Kind::IntegersMod: {
        Integer g;
        Integer r = reduce(a.get_num());
        mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
        return g == 1;
      }
    }
    return false;
  }

  Scalar inverse(const Scalar& a) const {
    require(is_unit(a), ErrorKind::NotInvertible, a.get_str() + " is not a unit in " + name());
    switch (kind_) {
      case Kind::Rationals: return Scalar(1) / a;
      case Kind::Integers: return a;
      case Kind::IntegersMod: {
        Integer r = reduce(a.get_num());
        Integer inv;
        mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
        return Scalar(inv);
      }
    }
    return a;
  }

  /// Decimal string for integers and residues, "p/q" for proper fractions.
  std::string format(const Scalar& a) const { return a.get_str(); }

  Scalar parse_element(std::string_view text) const {
    Scalar x;
    std::string s(text);
    if (s.empty() || x.set_str(s, 10) != 0)
      fail(ErrorKind::ParseError, "bad ring element '" + s + "'");
    if (x.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    Scalar canon = x;
    canon.canonicalize();
    if (kind_ == Kind::Rationals) {
      if (canon.get_str() != s && !(s.find('/') == std::string::npos && canon.get_den() == 1))
        fail(ErrorKind::ParseError, "rational '" + s + "' is not in lowest terms");
      return canon;
    }
    if (canon.get_den() != 1)
      fail(ErrorKind::ParseError, "'" + s + "' is not an element of " + name());
    if (kind_ == Kind::IntegersMod && (canon < 0 || canon.get_num() >= modulus_))
      fail(ErrorKind::ParseError, "residue '" + s + "' outside [0, " + modulus_.get_str() + ")");
    return canon;
  }

 private:
  Ring(Kind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  Integer reduce(const Integer& v) const {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    return r;
  }

  Scalar fix(Scalar x) const {
    if (kind_ == Kind::IntegersMod) reduce_in_place(x);
    return x;
  }

  Kind kind_;
  Integer modulus_;
};

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

}  // namespace hopfdual
