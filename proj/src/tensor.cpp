#include "qbundle/tensor.hpp"

#include <cassert>
#include <stdexcept>

namespace qbundle {

TensorElement TensorElement::pure(const std::vector<Element>& legs) {
  TensorElement r(0);
  r.terms_.emplace(TensorKey{}, Scalar(1));
  for (const auto& leg : legs) r = tensor(r, from_element(leg));
  return r;
}

void TensorElement::add(const TensorKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (terms_.empty()) arity_ = k.arity;
  assert(k.arity == arity_);
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_scaled(const TensorElement& t, const Scalar& c) {
  if (c.is_zero() || t.is_zero()) return;
  if (terms_.empty()) arity_ = t.arity_;
  if (t.arity_ != arity_) throw std::logic_error("tensor arity mismatch");
  for (const auto& [k, a] : t.terms_) add(k, c.is_one() ? a : a * c);
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  add_scaled(o, Scalar(1));
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  add_scaled(o, Scalar(-1));
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [k, a] : terms_) a *= c;
  }
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.arity_ != b.arity_) throw std::logic_error("tensor arity mismatch in product");
  TensorElement r(a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      TensorKey k;
      k.arity = ka.arity;
      for (std::size_t i = 0; i < ka.arity; ++i) k.legs[i] = ka.legs[i] * kb.legs[i];
      r.add(k, ca * cb);
    }
  }
  return r;
}

TensorElement tensor(const TensorElement& a, const TensorElement& b) {
  std::size_t n = a.arity_ + b.arity_;
  if (n > TensorKey::kMaxArity) throw std::logic_error("tensor arity too large");
  TensorElement r(n);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      TensorKey k;
      k.arity = static_cast<std::uint8_t>(n);
      for (std::size_t i = 0; i < ka.arity; ++i) k.legs[i] = ka.legs[i];
      for (std::size_t i = 0; i < kb.arity; ++i) k.legs[ka.arity + i] = kb.legs[i];
      r.add(k, ca * cb);
    }
  }
  return r;
}

TensorElement TensorElement::map_leg(std::size_t leg, const std::function<TensorElement(const Word&)>& f) const {
  TensorElement out;
  bool arity_set = false;
  for (const auto& [k, c] : terms_) {
    TensorElement img = f(k.legs[leg]);
    std::size_t n = arity_ - 1 + img.arity();
    if (!arity_set) {
      out = TensorElement(n);
      arity_set = true;
    }
    for (const auto& [ki, ci] : img.terms_) {
      TensorKey nk;
      nk.arity = static_cast<std::uint8_t>(n);
      std::size_t j = 0;
      for (std::size_t i = 0; i < leg; ++i) nk.legs[j++] = k.legs[i];
      for (std::size_t i = 0; i < ki.arity; ++i) nk.legs[j++] = ki.legs[i];
      for (std::size_t i = leg + 1; i < arity_; ++i) nk.legs[j++] = k.legs[i];
      out.add(nk, c * ci);
    }
  }
  if (!arity_set) out = TensorElement(arity_);
  return out;
}

TensorElement TensorElement::map_leg_element(std::size_t leg, const std::function<Element(const Word&)>& f) const {
  TensorElement out(arity_);
  for (const auto& [k, c] : terms_) {
    Element img = f(k.legs[leg]);
    for (const auto& [w, ci] : img) {
      TensorKey nk = k;
      nk.legs[leg] = w;
      out.add(nk, c * ci);
    }
  }
  return out;
}

TensorElement TensorElement::permute(const std::vector<std::size_t>& perm) const {
  TensorElement out(arity_);
  for (const auto& [k, c] : terms_) {
    TensorKey nk;
    nk.arity = k.arity;
    for (std::size_t i = 0; i < arity_; ++i) nk.legs[i] = k.legs[perm[i]];
    out.add(nk, c);
  }
  return out;
}

TensorElement TensorElement::contract(std::size_t leg, const std::function<Scalar(const Word&)>& f) const {
  TensorElement out(arity_ - 1);
  for (const auto& [k, c] : terms_) {
    Scalar v = f(k.legs[leg]);
    if (v.is_zero()) continue;
    TensorKey nk;
    nk.arity = static_cast<std::uint8_t>(arity_ - 1);
    std::size_t j = 0;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (i != leg) nk.legs[j++] = k.legs[i];
    }
    out.add(nk, c * v);
  }
  return out;
}

Element TensorElement::as_element() const {
  if (arity_ != 1 && !terms_.empty()) throw std::logic_error("as_element on arity != 1");
  Element r;
  for (const auto& [k, c] : terms_) r.add(k.legs[0], c);
  return r;
}

TensorElement TensorElement::from_element(const Element& x) {
  TensorElement r(1);
  for (const auto& [w, c] : x) {
    TensorKey k;
    k.arity = 1;
    k.legs[0] = w;
    r.add(k, c);
  }
  return r;
}

std::string TensorElement::str(const std::vector<const Alphabet*>& alphabets) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string body;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (i) body += " (x) ";
      body += alphabets[i]->word_str(it->first.legs[i]);
    }
    out += term_str(it->second, body, first);
    first = false;
  }
  return out;
}

}  // namespace qbundle
