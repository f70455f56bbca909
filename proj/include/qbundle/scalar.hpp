#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbundle {

using Rational = mpq_class;

/// Exponent pair of a monomial q^dq s^ds.
struct Mono {
  std::uint16_t dq = 0;
  std::uint16_t ds = 0;

  friend bool operator==(const Mono&, const Mono&) = default;
  // Lex with q > s.
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c = a.dq <=> b.dq; c != 0) return c;
    return a.ds <=> b.ds;
  }
};

/// Polynomial in the commuting indeterminates q, s with rational coefficients.
/// Terms are kept sorted by descending monomial, without zero coefficients.
class Poly2 {
 public:
  struct Term {
    Mono mono;
    Rational coef;
  };

  Poly2() = default;
  explicit Poly2(const Rational& c);
  explicit Poly2(long c) : Poly2(Rational(c)) {}
  static Poly2 monomial(Mono m, const Rational& c = 1);
  static Poly2 q() { return monomial({1, 0}); }
  static Poly2 s() { return monomial({0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Mono{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  int degree_q() const;
  int degree_s() const;
  Mono min_exponents() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly2& a, const Poly2& b);

  /// Exact division; the caller guarantees `d` divides `*this`.
  Poly2 div_exact(const Poly2& d) const;
  /// Divides out a monomial q^a s^b that is known to divide every term.
  Poly2 shift_down(Mono m) const;
  Poly2 shift_up(Mono m) const;

  Rational eval(const Rational& q0, const Rational& s0) const;
  /// Substitutes s := s0 and keeps q symbolic.
  Poly2 subst_s(const Rational& s0) const;
  /// Substitutes q := q0 and keeps s symbolic.
  Poly2 subst_q(const Rational& q0) const;

  std::string str() const;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Monic (leading coefficient 1) greatest common divisor over Q[q, s].
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Element of Q(q, s) kept in canonical form: coprime numerator and
/// denominator, denominator with leading coefficient 1, zero as 0/1.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Rational& c) : num_(c), den_(1) {}
  explicit Scalar(Poly2 p) : num_(std::move(p)), den_(1) {}
  Scalar(Poly2 num, Poly2 den);

  static Scalar q() { return Scalar(Poly2::q()); }
  static Scalar s() { return Scalar(Poly2::s()); }
  /// q^k for any integer k.
  static Scalar q_pow(int k);
  /// Parses the scalar literal grammar: integers, q, s, + - * / ^ and parentheses.
  static Scalar parse(std::string_view text);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(int k) const;
  Scalar inverse() const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Exact value at (q0, s0); throws PoleAtPoint when the denominator vanishes.
  Rational specialize(const Rational& q0, const Rational& s0) const;
  Scalar subst_s(const Rational& s0) const;

  /// Canonical text; re-parses to the same value.
  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool needs_parens() const;

 private:
  void normalize();
  Poly2 num_;
  Poly2 den_;
};

}  // namespace qbundle
