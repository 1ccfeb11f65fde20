#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotspan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient Laurent polynomial in one variable A.
/// Canonical form: zero coefficients are never stored.
class Laurent1 {
public:
  Laurent1() = default;
  explicit Laurent1(const BigInt& constant);
  static Laurent1 monomial(int exp, BigInt coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  int maxdeg() const;  // throws on zero polynomial
  int mindeg() const;
  int span() const { return maxdeg() - mindeg(); }
  BigInt coeff(int exp) const;

  void add_term(int exp, const BigInt& c);

  Laurent1 operator+(const Laurent1& o) const;
  Laurent1 operator-(const Laurent1& o) const;
  Laurent1 operator*(const Laurent1& o) const;
  Laurent1 operator-() const;
  bool operator==(const Laurent1& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent1& o) const { return !(*this == o); }

  Laurent1 pow(unsigned n) const;
  /// A -> A^{-1}
  Laurent1 mirrored() const;
  /// Multiply by A^k.
  Laurent1 shifted(int k) const;

  /// Canonical text form, terms in decreasing exponent: "-A^5 - A^-3 + A^-7".
  std::string to_string(const std::string& var = "A") const;

  const std::map<int, BigInt>& terms() const { return terms_; }

private:
  std::map<int, BigInt> terms_;
};

/// Exact Laurent polynomial in two variables (a, z).
class Laurent2 {
public:
  Laurent2() = default;
  explicit Laurent2(const BigInt& constant);
  static Laurent2 monomial(int ra, int sz, BigInt coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  int maxdeg_a() const;
  int mindeg_a() const;
  int span_a() const { return maxdeg_a() - mindeg_a(); }
  int mindeg_z() const;
  int maxdeg_z() const;
  BigInt coeff(int ra, int sz) const;

  void add_term(int ra, int sz, const BigInt& c);

  Laurent2 operator+(const Laurent2& o) const;
  Laurent2 operator-(const Laurent2& o) const;
  Laurent2 operator*(const Laurent2& o) const;
  Laurent2 operator-() const;
  bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent2& o) const { return !(*this == o); }

  Laurent2 pow(unsigned n) const;
  /// a -> a^{-1}
  Laurent2 mirrored_a() const;

  /// P(-A^3, A + A^{-1}), expanded exactly. Negative z-exponents are cleared
  /// by exact division; throws when the image is not a Laurent polynomial.
  Laurent1 substitute_bracket() const;

  /// Canonical text form, terms in ascending lex order on (r, s).
  std::string to_string() const;

  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

private:
  std::map<std::pair<int, int>, BigInt> terms_;
};

/// delta = (a + a^{-1}) z^{-1} - 1, the value of an extra split circle.
Laurent2 kauffman_delta();

/// True iff all exponents of a nonzero polynomial share a residue mod 4.
bool mod4_support_check(const Laurent1& p);

/// Jones polynomial in q = t^{1/4}; integer q-exponents encode quarter powers
/// of t. For a knot all exponents are 0 mod 4.
struct JonesPoly {
  Laurent1 q;

  int span_q() const { return q.span(); }
  /// span in t; span_q is always divisible by 4 for valid brackets.
  int span_t() const;
  std::string to_string() const { return q.to_string("q"); }
  bool operator==(const JonesPoly& o) const { return q == o.q; }
};

}  // namespace knotspan
