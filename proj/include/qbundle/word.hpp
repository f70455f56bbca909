#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qbundle {

using Letter = std::uint8_t;

/// Monomial in the free algebra: a short sequence of generator indices.
/// The generator index doubles as its rank in the monomial order, so the
/// built-in comparison is deg-lex (length first, then lexicographic).
class Word {
 public:
  static constexpr std::size_t kCapacity = 31;

  Word() = default;
  Word(std::initializer_list<Letter> letters);
  static Word letter(Letter g) { return Word{g}; }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter operator[](std::size_t i) const { return data_[i]; }
  const Letter* begin() const { return data_.data(); }
  const Letter* end() const { return data_.data() + len_; }

  void push_back(Letter g);
  Word subword(std::size_t pos, std::size_t len) const;
  /// Replaces [pos, pos+len) by `mid`.
  Word splice(std::size_t pos, std::size_t len, const Word& mid) const;
  bool contains_at(std::size_t pos, const Word& w) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.len_ == b.len_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::size_t hash() const;

 private:
  std::uint8_t len_ = 0;
  std::array<Letter, kCapacity> data_{};
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Ordered generator names; position = order rank.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when the symbol is not a generator.
  int find(std::string_view name) const;
  Letter at(std::string_view name) const;

  std::string word_str(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

}  // namespace qbundle
