#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/linalg.hpp"
#include "qbundle/presentation.hpp"
#include "qbundle/report.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/tensor.hpp"

namespace qbundle {

/// A presentation together with its completed rewriting system. All maps
/// return normal forms.
class Algebra {
 public:
  explicit Algebra(Presentation p);
  Algebra(Presentation p, RewriteSystem rs);

  const Presentation& presentation() const { return p_; }
  const Alphabet& alphabet() const { return p_.alphabet; }
  const RewriteSystem& rewrite() const { return rs_; }
  const std::string& name() const { return p_.name; }
  Letter gen(std::string_view name) const { return p_.alphabet.at(name); }

  Element nf(const Element& x) const { return rs_.normal_form(x); }
  /// Parses and reduces.
  Element parse(std::string_view text) const { return nf(p_.parse(text)); }
  std::string str(const Element& x) const { return x.str(p_.alphabet); }
  /// Product followed by reduction.
  Element mul(const Element& a, const Element& b) const { return nf(a * b); }

  /// Anti-multiplicative involution fixing q, s and rational coefficients.
  Element star(const Element& x) const;

  bool has_hopf() const { return p_.hopf.has_value(); }
  TensorElement coproduct(const Element& x) const;
  Scalar counit(const Element& x) const;
  Element antipode(const Element& x) const;
  Element antipode_inverse(const Element& x) const;

 private:
  const HopfData& hopf() const;

  Presentation p_;
  RewriteSystem rs_;
};

/// Reduces every leg of a tensor with the matching leg reducer.
using LegReducer = std::function<Element(const Element&)>;
TensorElement reduce_legs(const TensorElement& t, const std::vector<LegReducer>& reducers);
LegReducer reducer(const Algebra& a);

/// Extends generator images multiplicatively (or anti-multiplicatively),
/// reducing after every factor with `nf`.
Element extend_multiplicative(const Element& x, const std::vector<Element>& images, const LegReducer& nf,
                              bool anti = false);
/// Same for images in a tensor product; legwise products.
TensorElement extend_multiplicative(const Element& x, const std::vector<TensorElement>& images,
                                    const std::vector<LegReducer>& nf);

/// Algebra map given by target images of the generators of `source`.
class Morphism {
 public:
  Morphism(const Algebra& source, const Algebra& target, std::vector<Element> images);
  /// Uses the morphism data named `name` stored in the source presentation.
  static Morphism named(const Algebra& source, const Algebra& target, const std::string& name);

  const Algebra& source() const { return *source_; }
  const Algebra& target() const { return *target_; }
  const std::vector<Element>& images() const { return images_; }
  Element operator()(const Element& x) const;

 private:
  const Algebra* source_;
  const Algebra* target_;
  std::vector<Element> images_;
};

/// Checks that every relation maps to zero; one entry per relation.
std::vector<std::pair<std::string, Element>> morphism_residues(const Morphism& m);

/// For every relation r: star(r) reduces to zero.
Report check_star_consistency(const Algebra& a);
std::vector<CheckSpec> star_checks(const Algebra& a);

/// Delta and epsilon kill the relations, coassociativity and counit laws on
/// generators, antipode laws on generators (when an antipode is given) and
/// S(S^-1(g)) = g = S^-1(S(g)) (when an inverse is given).
Report check_bialgebra(const Algebra& a);
std::vector<CheckSpec> bialgebra_checks(const Algebra& a);

/// sum S(g_(1)) g_(2) - eps(g) and sum g_(1) S(g_(2)) - eps(g), per generator,
/// for an arbitrary list of antipode images.
std::vector<std::pair<std::string, Element>> antipode_residues(const Algebra& a, const std::vector<Element>& images);

/// Right-ideal quotient of a coalgebra: the degree-sliced span of j*w for
/// the ideal generators j and normal words w, in row echelon form. Classes
/// are represented by their remainder against the echelon basis.
class QuotientCoalgebra {
 public:
  QuotientCoalgebra(const Algebra& c, std::vector<Element> ideal, int degree);

  const Algebra& base() const { return *c_; }
  int degree() const { return degree_; }
  const std::vector<Element>& ideal() const { return ideal_; }
  std::size_t ideal_dimension() const { return rows_.size(); }
  const EchelonBasis<Element>& echelon() const { return rows_; }

  /// Canonical representative of pi(x); x is reduced first.
  Element reduce(const Element& x) const;
  /// pi(x) = 0.
  bool in_ideal(const Element& x) const { return reduce(x).is_zero(); }
  /// (pi (x) pi) Delta(x), legs canonical.
  TensorElement coproduct(const Element& x) const;
  /// pi applied to one leg of a tensor.
  TensorElement reduce_leg(const TensorElement& t, std::size_t leg) const;
  /// Counit on classes (J lies in the kernel of the counit).
  Scalar counit(const Element& x) const { return c_->counit(x); }

  /// Returns the witness of the first failure of Delta(j*w) in J(x)C + C(x)J on
  /// the computed basis, or nothing when all pass.
  std::optional<std::string> coideal_failure() const;

  /// Throws ZeroClass when pi(x) = 0.
  bool is_grouplike(const Element& x) const;

 private:
  const Algebra* c_;
  std::vector<Element> ideal_;
  int degree_;
  // Span of NF(j*w) over normal words w of degree <= degree + 1.
  EchelonBasis<Element> rows_;
};

/// Representative of d_{m,n}: variant 1 and 2 are the two product formulas as
/// printed, variant 3 is variant 1 with the n < 0 factors alpha* + q^{2-k} s gamma*
/// (the printed q^{-k} is not group-like). `reversed` multiplies right to left.
Element d_element(const Algebra& uq2, int m, int n, int variant, bool reversed = false);

}  // namespace qbundle
