#include "qbundle/word.hpp"

#include <algorithm>

#include "qbundle/error.hpp"

namespace qbundle {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter g : letters) push_back(g);
}

void Word::push_back(Letter g) {
  if (len_ == kCapacity) throw Error(ErrorKind::DegreeBoundExceeded, "word longer than " + std::to_string(kCapacity));
  data_[len_++] = g;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  std::copy_n(data_.begin() + pos, len, w.data_.begin());
  w.len_ = static_cast<std::uint8_t>(len);
  return w;
}

Word Word::splice(std::size_t pos, std::size_t len, const Word& mid) const {
  std::size_t n = len_ - len + mid.len_;
  if (n > kCapacity) throw Error(ErrorKind::DegreeBoundExceeded, "word longer than " + std::to_string(kCapacity));
  Word w;
  auto out = std::copy_n(data_.begin(), pos, w.data_.begin());
  out = std::copy(mid.begin(), mid.end(), out);
  std::copy(data_.begin() + pos + len, data_.begin() + len_, out);
  w.len_ = static_cast<std::uint8_t>(n);
  return w;
}

bool Word::contains_at(std::size_t pos, const Word& w) const {
  return pos + w.len_ <= len_ && std::equal(w.begin(), w.end(), data_.begin() + pos);
}

Word operator*(const Word& a, const Word& b) {
  std::size_t n = a.len_ + b.len_;
  if (n > Word::kCapacity) {
    throw Error(ErrorKind::DegreeBoundExceeded, "word longer than " + std::to_string(Word::kCapacity));
  }
  Word w = a;
  std::copy(b.begin(), b.end(), w.data_.begin() + a.len_);
  w.len_ = static_cast<std::uint8_t>(n);
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  for (std::size_t i = 0; i < a.len_; ++i) {
    if (auto c = a.data_[i] <=> b.data_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ULL ^ len_;
  for (std::size_t i = 0; i < len_; ++i) {
    h ^= data_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 250) throw Error(ErrorKind::ValidationError, "alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second) {
      throw Error(ErrorKind::ValidationError, "duplicate generator '" + names_[i] + "'");
    }
  }
}

int Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

Letter Alphabet::at(std::string_view name) const {
  int g = find(name);
  if (g < 0) throw Error(ErrorKind::ValidationError, "unknown generator '" + std::string(name) + "'");
  return static_cast<Letter>(g);
}

std::string Alphabet::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += names_[w[i]];
  }
  return out;
}

}  // namespace qbundle
