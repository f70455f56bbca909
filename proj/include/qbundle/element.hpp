#pragma once

#include <map>
#include <string>

#include "qbundle/scalar.hpp"
#include "qbundle/word.hpp"

namespace qbundle {

/// Finite linear combination of words with Q(q, s) coefficients.
/// Terms iterate in increasing deg-lex order; zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Word, Scalar>;

  Element() = default;
  Element(const Scalar& c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  Element(Word w, const Scalar& c = 1) { add(w, c); }  // NOLINT(google-explicit-constructor)
  static Element letter(Letter g) { return Element(Word::letter(g)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  /// Largest word under deg-lex; undefined on zero.
  const Word& lead_word() const { return terms_.rbegin()->first; }
  const Scalar& lead_coef() const { return terms_.rbegin()->second; }
  /// Maximal word length, -1 for zero.
  int degree() const;
  /// Coefficient of the empty word.
  Scalar constant_term() const;
  Scalar coef(const Word& w) const;
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

  void add(const Word& w, const Scalar& c);
  void add_scaled(const Element& x, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  /// Free-algebra product (word concatenation).
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Substitutes s := s0 in every coefficient.
  Element subst_s(const Rational& s0) const;

  std::string str(const Alphabet& alphabet) const;

 private:
  Terms terms_;
};

Element pow(const Element& x, int k);

/// Coefficient text for a term `c*word`; empty when c = 1 and the word is nonempty.
std::string term_str(const Scalar& c, const std::string& word, bool first);

}  // namespace qbundle
