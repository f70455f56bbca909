#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qbundle/coalgebra.hpp"

namespace qbundle {

/// A coalgebra whose elements are represented by elements of an algebra;
/// `reduce` picks the canonical representative.
class Coalgebra {
 public:
  virtual ~Coalgebra() = default;
  virtual const Algebra& base() const = 0;
  virtual std::string name() const = 0;
  virtual Element reduce(const Element& x) const = 0;
  /// Legs canonical.
  virtual TensorElement coproduct(const Element& x) const = 0;
  virtual Scalar counit(const Element& x) const = 0;
};

class HopfCoalgebra final : public Coalgebra {
 public:
  explicit HopfCoalgebra(const Algebra& a) : a_(&a) {}
  const Algebra& base() const override { return *a_; }
  std::string name() const override { return a_->name(); }
  Element reduce(const Element& x) const override { return a_->nf(x); }
  TensorElement coproduct(const Element& x) const override { return a_->coproduct(x); }
  Scalar counit(const Element& x) const override { return a_->counit(x); }

 private:
  const Algebra* a_;
};

class QuotientView final : public Coalgebra {
 public:
  explicit QuotientView(const QuotientCoalgebra& q) : q_(&q) {}
  const QuotientCoalgebra& quotient() const { return *q_; }
  const Algebra& base() const override { return q_->base(); }
  std::string name() const override { return q_->base().name() + "/J"; }
  Element reduce(const Element& x) const override { return q_->reduce(x); }
  TensorElement coproduct(const Element& x) const override { return q_->coproduct(x); }
  Scalar counit(const Element& x) const override { return q_->counit(x); }

 private:
  const QuotientCoalgebra* q_;
};

using LinearMap = std::function<Element(const Element&)>;

/// Right coaction source -> source (x) target; values have both legs reduced.
class Coaction {
 public:
  using Map = std::function<TensorElement(const Element&)>;

  Coaction(const Algebra& source, const Coalgebra& target, Map f)
      : source_(&source), target_(&target), f_(std::move(f)) {}
  /// Multiplicative extension of generator images in source (x) target.base().
  static Coaction multiplicative(const Algebra& source, const Coalgebra& target, std::vector<TensorElement> images);
  /// The coproduct of a coalgebra as its right coaction on itself.
  static Coaction regular(const Coalgebra& c);

  const Algebra& source() const { return *source_; }
  const Coalgebra& target() const { return *target_; }
  TensorElement operator()(const Element& x) const { return f_(source_->nf(x)); }

  /// (id (x) pi) after this coaction, pi: target -> d given on representatives.
  Coaction pushforward(const Coalgebra& d, LinearMap pi) const;
  /// Pushforward along the quotient map; q must be a quotient of the target's base.
  Coaction pushforward(const QuotientView& q) const;
  /// Pushforward along an algebra map from the target's base onto d's base.
  Coaction pushforward(const Morphism& m, const Coalgebra& d) const;

 private:
  const Algebra* source_;
  const Coalgebra* target_;
  Map f_;
};

/// Solutions of co(p) = p (x) e among elements of degree <= degree, in
/// reduced echelon form over the normal words of the source.
struct CoinvariantBasis {
  int degree = 0;
  Element group_like;
  std::vector<Element> basis;

  bool contains(const Element& x) const;
};

CoinvariantBasis coinvariants(const Coaction& co, const Element& e, int degree);
/// Same, for an arbitrary linear condition f(p) = 0 on the normal words.
CoinvariantBasis solve_on_words(const Algebra& a, int degree, const std::function<TensorElement(const Word&)>& f);

/// Doi-Koppinen data: P a right H-comodule algebra with coaction `delta`
/// (images of the generators of P in P (x) H), C a right H-module coalgebra
/// with action `act` (c . g for a generator g of H), e a group-like of C,
/// pi: C -> D a coalgebra map and right H-module map, `act_d` the action on D.
struct DKData {
  const Algebra* p = nullptr;
  const Algebra* h = nullptr;
  const Coalgebra* c = nullptr;
  const Coalgebra* d = nullptr;
  std::vector<TensorElement> delta;
  std::function<Element(const Element&, Letter)> act;
  std::function<Element(const Element&, Letter)> act_d;
  Element e;
  LinearMap pi;
};

enum class Over { C, D };

/// The principal extension P with entwining psi(c (x) p) = sum p_0 (x) c.p_1,
/// right coaction rho(p) = psi(e (x) p), and everything derived from it.
/// Tensor conventions: C (x) P for psi^-1 and lambda, P (x) C for the rest.
class Bundle {
 public:
  explicit Bundle(DKData data);

  const DKData& data() const { return d_; }
  const Algebra& P() const { return *d_.p; }
  const Algebra& H() const { return *d_.h; }
  const Coalgebra& C() const { return *d_.c; }
  const Coalgebra& D() const { return *d_.d; }
  const Element& e() const { return d_.e; }
  Element e_bar() const { return d_.pi(d_.e); }
  Element pi(const Element& c) const { return d_.pi(c); }

  /// c . h, letter by letter.
  Element act(const Element& c, const Element& h) const;
  /// c . S^-1(h) without forming S^-1(h) in H.
  Element act_antipode_inverse(const Element& c, const Element& h) const;
  /// d . h on D.
  Element act_d(const Element& d, const Element& h) const;
  Element act_d_antipode_inverse(const Element& d, const Element& h) const;
  /// r(h) = e . h.
  Element r(const Element& h) const { return act(d_.e, h); }

  /// Multiplicative extension of the generator images, legs reduced.
  TensorElement delta(const Element& p) const;
  /// Entwining and its inverse by folding over letters of p.
  TensorElement psi(const Element& c, const Element& p) const;
  TensorElement psi(const TensorElement& cp) const;
  TensorElement psi_inv(const Element& p, const Element& c) const;
  TensorElement psi_inv(const TensorElement& pc) const;
  /// Doi-Koppinen formula evaluated on delta(p) with H-legs reduced.
  TensorElement psi_direct(const Element& c, const Element& p) const;

  /// (pi (x) id) psi^-1(p (x) c) for pi(c) = d, folded on D; needs pi to be
  /// a right H-module map.
  TensorElement psi_inv_bar(const Element& p, const Element& d) const;

  TensorElement rho(const Element& p) const { return psi(d_.e, p); }
  TensorElement rho_bar(const Element& p) const;
  /// lambda(p) = psi^-1(p (x) e), in C (x) P.
  TensorElement lambda(const Element& p) const { return psi_inv(p, d_.e); }
  /// p (x) p' -> p rho(p').
  TensorElement can(const TensorElement& pp) const;
  /// P (x) C -> D (x) P (x) C: (pi (x) id (x) id)(psi^-1 (x) id)(id (x) Delta),
  /// with the first leg computed through psi_inv_bar.
  TensorElement Lambda(const TensorElement& px) const;
  /// Same map with psi^-1 evaluated in C and pi applied last.
  TensorElement Lambda_in_c(const TensorElement& px) const;
  /// (id (x) Lambda) on D (x) P (x) C.
  TensorElement Lambda_tail(const TensorElement& dpx) const;

  Coaction rho_coaction() const;
  Coaction rho_bar_coaction() const;
  /// (id (x) pi) Delta_C on C; its e_bar-coinvariants are X.
  Coaction fibre_coaction() const;

  CoinvariantBasis A(int degree) const { return coinvariants(rho_bar_coaction(), e_bar(), degree); }
  CoinvariantBasis B(int degree) const { return coinvariants(rho_coaction(), d_.e, degree); }
  CoinvariantBasis X(int degree) const { return coinvariants(fibre_coaction(), e_bar(), degree); }
  /// { p : (pi (x) id) lambda(p) = e_bar (x) p }.
  CoinvariantBasis A_bar(int degree) const;

  /// Residues of the cotensor conditions for t in P (x) C: the two coactions
  /// on P (x) X must agree, and every C-leg must lie in X.
  struct CotensorResidue {
    TensorElement coaction;
    TensorElement legs;
    bool is_zero() const { return coaction.is_zero() && legs.is_zero(); }
  };
  CotensorResidue cotensor_residue(const TensorElement& t, Over over) const;
  bool in_cotensor(const TensorElement& t, Over over) const { return cotensor_residue(t, over).is_zero(); }
  /// Basis of the truncated cotensor product: combinations of p (x) x with p
  /// a normal word of degree <= degree and x in `x_basis`.
  std::vector<TensorElement> cotensor_basis(const std::vector<Element>& x_basis, int degree, Over over) const;

  /// P-leg reduced with P, C-leg with C.
  TensorElement reduce_pc(const TensorElement& t) const;
  std::string str_pc(const TensorElement& t) const;
  std::string str(const TensorElement& t, const std::vector<const Algebra*>& legs) const;

 private:
  DKData d_;
  std::vector<Element> s_inv_;
};

}  // namespace qbundle
