#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbundle/element.hpp"

namespace qbundle {

/// Tuple of words, one per tensor leg.
struct TensorKey {
  static constexpr std::size_t kMaxArity = 4;
  std::array<Word, kMaxArity> legs{};
  std::uint8_t arity = 0;

  const Word& operator[](std::size_t i) const { return legs[i]; }
  Word& operator[](std::size_t i) { return legs[i]; }
  friend bool operator==(const TensorKey& a, const TensorKey& b) {
    if (a.arity != b.arity) return false;
    for (std::size_t i = 0; i < a.arity; ++i) {
      if (!(a.legs[i] == b.legs[i])) return false;
    }
    return true;
  }
  friend std::strong_ordering operator<=>(const TensorKey& a, const TensorKey& b) {
    if (auto c = a.arity <=> b.arity; c != 0) return c;
    for (std::size_t i = 0; i < a.arity; ++i) {
      if (auto c = a.legs[i] <=> b.legs[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
};

/// Linear combination of k-tuples of words (an element of a k-fold tensor
/// product). Each leg belongs to its own algebra; reduction is applied by the
/// owning structure, this class only stores terms.
class TensorElement {
 public:
  using Terms = std::map<TensorKey, Scalar>;

  TensorElement() = default;
  explicit TensorElement(std::size_t arity) : arity_(arity) {}
  static TensorElement pure(const std::vector<Element>& legs);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add(const TensorKey& k, const Scalar& c);
  void add_scaled(const TensorElement& t, const Scalar& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Legwise product in the free algebras (no reduction).
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  /// Outer tensor product: legs of `a` followed by legs of `b`.
  friend TensorElement tensor(const TensorElement& a, const TensorElement& b);

  /// Applies a linear map to leg `leg`, replacing it with the legs of the image.
  /// The image of a word may have any arity >= 0 (arity 0 means a scalar).
  TensorElement map_leg(std::size_t leg, const std::function<TensorElement(const Word&)>& f) const;
  /// Convenience for maps Word -> Element (arity preserved).
  TensorElement map_leg_element(std::size_t leg, const std::function<Element(const Word&)>& f) const;
  /// Permutes legs: new leg i = old leg perm[i].
  TensorElement permute(const std::vector<std::size_t>& perm) const;
  /// Contracts leg `leg` with a scalar functional.
  TensorElement contract(std::size_t leg, const std::function<Scalar(const Word&)>& f) const;

  /// The unique leg of an arity-1 tensor as an Element.
  Element as_element() const;
  static TensorElement from_element(const Element& x);

  std::string str(const std::vector<const Alphabet*>& alphabets) const;

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

}  // namespace qbundle
