#include "qbundle/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "qbundle/error.hpp"

namespace qbundle {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DegreeIncompatibleRelation: return "DegreeIncompatibleRelation";
    case ErrorKind::RuleCapExceeded: return "RuleCapExceeded";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::NoCoalgebraData: return "NoCoalgebraData";
    case ErrorKind::NoInverseAntipode: return "NoInverseAntipode";
    case ErrorKind::CoidealCheckFailed: return "CoidealCheckFailed";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::IncompatibleTargets: return "IncompatibleTargets";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Poly2

class PolyBuilder {
 public:
  static void canonicalize(std::vector<Poly2::Term>& t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.mono > b.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i + 1;
      Rational c = t[i].coef;
      while (j < t.size() && t[j].mono == t[i].mono) c += t[j++].coef;
      if (c != 0) {
        t[out].mono = t[i].mono;
        t[out].coef = std::move(c);
        ++out;
      }
      i = j;
    }
    t.resize(out);
  }
  static Poly2 from(std::vector<Poly2::Term> t) {
    canonicalize(t);
    Poly2 p;
    p.terms_ = std::move(t);
    return p;
  }
  static std::vector<Poly2::Term>& raw(Poly2& p) { return p.terms_; }
};

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.push_back({Mono{}, c});
}

Poly2 Poly2::monomial(Mono m, const Rational& c) {
  Poly2 p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly2::is_one() const { return terms_.size() == 1 && terms_[0].mono == Mono{} && terms_[0].coef == 1; }

int Poly2::degree_q() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.dq);
  return d;
}

int Poly2::degree_s() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.ds);
  return d;
}

Mono Poly2::min_exponents() const {
  if (terms_.empty()) return {};
  Mono m = terms_[0].mono;
  for (const auto& t : terms_) {
    m.dq = std::min(m.dq, t.mono.dq);
    m.ds = std::min(m.ds, t.mono.ds);
  }
  return m;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

void merge_add(std::vector<Poly2::Term>& out, const std::vector<Poly2::Term>& a,
               const std::vector<Poly2::Term>& b, bool negate_b) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j]);
      if (negate_b) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
}

}  // namespace

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  merge_add(out, terms_, o.terms_, false);
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  merge_add(out, terms_, o.terms_, true);
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial() && b.lead().mono == Mono{}) return a * b.lead().coef;
  if (a.is_monomial() && a.lead().mono == Mono{}) return b * a.lead().coef;
  std::vector<Poly2::Term> t;
  t.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      t.push_back({Mono{static_cast<std::uint16_t>(x.mono.dq + y.mono.dq),
                        static_cast<std::uint16_t>(x.mono.ds + y.mono.ds)},
                   x.coef * y.coef});
    }
  }
  return PolyBuilder::from(std::move(t));
}

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

Poly2 Poly2::shift_down(Mono m) const {
  Poly2 r = *this;
  for (auto& t : r.terms_) {
    assert(t.mono.dq >= m.dq && t.mono.ds >= m.ds);
    t.mono.dq -= m.dq;
    t.mono.ds -= m.ds;
  }
  return r;
}

Poly2 Poly2::shift_up(Mono m) const {
  Poly2 r = *this;
  for (auto& t : r.terms_) {
    t.mono.dq += m.dq;
    t.mono.ds += m.ds;
  }
  return r;
}

Poly2 Poly2::div_exact(const Poly2& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (d.is_monomial()) {
    Poly2 r = shift_down(d.lead().mono);
    Rational inv = 1 / d.lead().coef;
    return r *= inv;
  }
  Poly2 rem = *this;
  std::vector<Term> quot;
  const Term& dl = d.lead();
  Rational inv = 1 / dl.coef;
  while (!rem.is_zero()) {
    const Term& rl = rem.lead();
    if (rl.mono.dq < dl.mono.dq || rl.mono.ds < dl.mono.ds) {
      throw std::logic_error("Poly2::div_exact: inexact division");
    }
    Term t{Mono{static_cast<std::uint16_t>(rl.mono.dq - dl.mono.dq),
                static_cast<std::uint16_t>(rl.mono.ds - dl.mono.ds)},
           rl.coef * inv};
    rem -= monomial(t.mono, t.coef) * d;
    quot.push_back(std::move(t));
  }
  return PolyBuilder::from(std::move(quot));
}

namespace {

Rational rpow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Rational Poly2::eval(const Rational& q0, const Rational& s0) const {
  Rational r = 0;
  for (const auto& t : terms_) r += t.coef * rpow(q0, t.mono.dq) * rpow(s0, t.mono.ds);
  return r;
}

Poly2 Poly2::subst_s(const Rational& s0) const {
  std::vector<Term> t;
  for (const auto& x : terms_) t.push_back({Mono{x.mono.dq, 0}, x.coef * rpow(s0, x.mono.ds)});
  return PolyBuilder::from(std::move(t));
}

Poly2 Poly2::subst_q(const Rational& q0) const {
  std::vector<Term> t;
  for (const auto& x : terms_) t.push_back({Mono{0, x.mono.ds}, x.coef * rpow(q0, x.mono.dq)});
  return PolyBuilder::from(std::move(t));
}

namespace {

std::string mono_str(Mono m) {
  std::string out;
  auto add = [&](const char* v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  add("q", m.dq);
  add("s", m.ds);
  return out;
}

}  // namespace

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string m = mono_str(t.mono);
    if (m.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += m;
    } else {
      out += c.get_str() + "*" + m;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GCD over Q[q, s], viewed as Q[s][q].

namespace {

using UPoly = std::vector<Rational>;  // coefficients in s, ascending degree

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  utrim(r);
  return r;
}

// Division with remainder over Q.
void udivmod(const UPoly& a, const UPoly& b, UPoly& quo, UPoly& rem) {
  rem = a;
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational inv = 1 / b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rational f = rem.back() * inv;
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= f * b[i];
    rem.pop_back();
    utrim(rem);
  }
  utrim(quo);
}

UPoly umonic(UPoly a) {
  if (a.empty()) return a;
  Rational inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly qq, r;
    udivmod(a, b, qq, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
  UPoly qq, r;
  udivmod(a, b, qq, r);
  assert(r.empty());
  return qq;
}

using BPoly = std::vector<UPoly>;  // coefficients in q, ascending degree; each in Q[s]

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_b(const Poly2& p) {
  BPoly r(p.degree_q() + 1);
  for (const auto& t : p.terms()) {
    auto& u = r[t.mono.dq];
    if (u.size() <= t.mono.ds) u.resize(t.mono.ds + 1, Rational(0));
    u[t.mono.ds] = t.coef;
  }
  return r;
}

Poly2 from_b(const BPoly& b) {
  std::vector<Poly2::Term> t;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (b[i][j] != 0) {
        t.push_back({Mono{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)}, b[i][j]});
      }
    }
  }
  return PolyBuilder::from(std::move(t));
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? umonic(c) : ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly bdiv_content(const BPoly& p, const UPoly& c) {
  if (c.size() == 1 && c[0] == 1) return p;
  BPoly r = p;
  for (auto& x : r) {
    if (!x.empty()) x = udiv_exact(x, c);
  }
  return r;
}

// Pseudo-remainder of a by b in Q[s][q].
BPoly bprem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    UPoly la = a.back();
    for (auto& x : a) x = umul(x, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = usub(a[i + shift], umul(la, b[i]));
    btrim(a);
  }
  return a;
}

Poly2 monic(const Poly2& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.lead().coef);
}

Poly2 gcd_core(const Poly2& a, const Poly2& b) {
  BPoly A = to_b(a);
  BPoly B = to_b(b);
  if (A.size() < B.size()) std::swap(A, B);
  UPoly ca = bcontent(A);
  UPoly cb = bcontent(B);
  UPoly cg = ugcd(ca, cb);
  A = bdiv_content(A, ca);
  B = bdiv_content(B, cb);
  while (B.size() > 1) {
    BPoly R = bprem(A, B);
    A = std::move(B);
    if (R.empty()) {
      B.clear();
      break;
    }
    B = bdiv_content(R, bcontent(R));
  }
  BPoly g;
  if (B.size() == 1) {
    // Nonzero remainder of q-degree 0: primitive parts are coprime.
    g = BPoly{UPoly{Rational(1)}};
  } else {
    g = std::move(A);
  }
  for (auto& x : g) {
    if (!x.empty()) x = umul(x, cg);
  }
  return monic(from_b(g));
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly2(1);
  Mono ma = a.min_exponents();
  Mono mb = b.min_exponents();
  Mono mg{std::min(ma.dq, mb.dq), std::min(ma.ds, mb.ds)};
  if (a.is_monomial() || b.is_monomial()) return Poly2::monomial(mg);
  if (a == b) return monic(a);
  Poly2 A = a.shift_down(ma);
  Poly2 B = b.shift_down(mb);
  Poly2 g = (A.is_constant() || B.is_constant()) ? Poly2(1) : gcd_core(A, B);
  return g.shift_up(mg);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  if (den_.is_one()) return;
  Poly2 g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  const Rational& lc = den_.lead().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar Scalar::q_pow(int k) {
  if (k >= 0) return Scalar(Poly2::monomial({static_cast<std::uint16_t>(k), 0}));
  Scalar r;
  r.num_ = Poly2(1);
  r.den_ = Poly2::monomial({static_cast<std::uint16_t>(-k), 0});
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Scalar r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly2 g1 = gcd(a.num_, b.den_);
  Poly2 g2 = gcd(b.num_, a.den_);
  Poly2 an = g1.is_one() ? a.num_ : a.num_.div_exact(g1);
  Poly2 bd = g1.is_one() ? b.den_ : b.den_.div_exact(g1);
  Poly2 bn = g2.is_one() ? b.num_ : b.num_.div_exact(g2);
  Poly2 ad = g2.is_one() ? a.den_ : a.den_.div_exact(g2);
  r.num_ = an * bn;
  r.den_ = ad * bd;
  const Rational& lc = r.den_.lead().coef;
  if (lc != 1) {
    Rational inv = 1 / lc;
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  Scalar r;
  r.num_ = den_;
  r.den_ = num_;
  Rational inv = 1 / r.den_.lead().coef;
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
  return a * b.inverse();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Rational Scalar::specialize(const Rational& q0, const Rational& s0) const {
  Rational d = den_.eval(q0, s0);
  if (d == 0) {
    throw Error(ErrorKind::PoleAtPoint, "denominator " + den_.str() + " vanishes at q=" + q0.get_str() +
                                            ", s=" + s0.get_str());
  }
  return num_.eval(q0, s0) / d;
}

Scalar Scalar::subst_s(const Rational& s0) const {
  Poly2 d = den_.subst_s(s0);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator " + den_.str() + " vanishes at s=" + s0.get_str());
  return Scalar(num_.subst_s(s0), d);
}

bool Scalar::needs_parens() const { return den_.is_one() && num_.terms().size() > 1; }

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
  std::string d = den_.str();
  bool bare = den_.is_monomial() && den_.lead().coef == 1 && (den_.lead().mono.dq == 0 || den_.lead().mono.ds == 0);
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qbundle
