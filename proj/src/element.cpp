#include "qbundle/element.hpp"

#include "qbundle/error.hpp"

namespace qbundle {

int Element::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

Scalar Element::constant_term() const { return coef(Word{}); }

Scalar Element::coef(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar{} : it->second;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& x, const Scalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    for (const auto& [w, a] : x.terms_) add(w, a);
  } else {
    for (const auto& [w, a] : x.terms_) add(w, a * c);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [w, a] : terms_) a *= c;
  }
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
  }
  return r;
}

Element pow(const Element& x, int k) {
  if (k < 0) throw Error(ErrorKind::ParseError, "negative power of a noncommutative element");
  Element r(Scalar(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

Element Element::subst_s(const Rational& s0) const {
  Element r;
  for (const auto& [w, c] : terms_) r.add(w, c.subst_s(s0));
  return r;
}

std::string term_str(const Scalar& c, const std::string& word, bool first) {
  // Pull a leading minus out of single-term numerators so sums read naturally.
  Scalar mag = c;
  bool neg = false;
  if (c.num().terms().size() == 1 && c.num().lead().coef < 0) {
    neg = true;
    mag = -c;
  }
  std::string out;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (word.empty()) {
    out += mag.needs_parens() ? "(" + mag.str() + ")" : mag.str();
  } else if (mag.is_one()) {
    out += word;
  } else {
    out += (mag.needs_parens() ? "(" + mag.str() + ")" : mag.str()) + "*" + word;
  }
  return out;
}

std::string Element::str(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += term_str(it->second, it->first.empty() ? "" : alphabet.word_str(it->first), first);
    first = false;
  }
  return out;
}

}  // namespace qbundle
