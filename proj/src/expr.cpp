#include "qbundle/expr.hpp"

#include <cctype>
#include <string>

#include "qbundle/error.hpp"

namespace qbundle {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<const Alphabet*> legs) : text_(text), legs_(std::move(legs)) {}

  TensorElement run() {
    TensorElement r = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                                           std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool tensor_sep() {
    skip_ws();
    if (legs_.size() < 2 || text_.substr(pos_, 3) != "(x)") return false;
    pos_ += 3;
    return true;
  }

  TensorElement sum() {
    TensorElement r(legs_.size());
    r += tterm();
    while (true) {
      if (accept('+')) {
        r += tterm();
      } else if (accept('-')) {
        r -= tterm();
      } else {
        return r;
      }
    }
  }

  TensorElement tterm() {
    bool neg = accept('-');
    std::vector<Element> factors;
    factors.push_back(product(0));
    while (tensor_sep()) {
      if (factors.size() == legs_.size()) fail("too many tensor factors");
      factors.push_back(product(factors.size()));
    }
    if (factors.size() != legs_.size()) {
      fail("expected " + std::to_string(legs_.size()) + " tensor factors, got " + std::to_string(factors.size()));
    }
    TensorElement t = TensorElement::pure(factors);
    if (neg) t = -t;
    return t;
  }

  // Inside parentheses the sum must stay on the current leg.
  Element nested_sum(std::size_t leg) {
    Element r = signed_product(leg);
    while (true) {
      if (accept('+')) {
        r += signed_product(leg);
      } else if (accept('-')) {
        r -= signed_product(leg);
      } else {
        return r;
      }
    }
  }

  Element signed_product(std::size_t leg) {
    if (accept('-')) return -product(leg);
    return product(leg);
  }

  Element product(std::size_t leg) {
    Element r = power(leg);
    while (true) {
      if (accept('*')) {
        r = r * power(leg);
      } else if (accept('/')) {
        std::size_t at = pos_;
        Element d = power(leg);
        if (!d.is_scalar()) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in \"" + std::string(text_) + "\"");
        r *= d.constant_term().inverse();
      } else {
        return r;
      }
    }
  }

  Element power(std::size_t leg) {
    Element base = primary(leg);
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (!neg) return pow(base, k);
    if (!base.is_scalar()) fail("negative power of a non-scalar");
    if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Element(base.constant_term().pow(-k));
  }

  Element primary(std::size_t leg) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element r = nested_sum(leg);
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Element(Scalar(Rational(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return Element(Scalar::q());
      if (name == "s") return Element(Scalar::s());
      int g = legs_[leg] ? legs_[leg]->find(name) : -1;
      if (g < 0) {
        pos_ = start;
        fail("undeclared symbol '" + std::string(name) + "'");
      }
      return Element::letter(static_cast<Letter>(g));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::vector<const Alphabet*> legs_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, {&alphabet}).run().as_element();
}

TensorElement parse_tensor(std::string_view text, const std::vector<const Alphabet*>& legs) {
  return Parser(text, legs).run();
}

Relation parse_relation(std::string_view text, const Alphabet& alphabet) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "relation needs exactly one '=' in \"" + std::string(text) + "\"");
  }
  Element lhs = parse_element(text.substr(0, eq), alphabet);
  Element rhs = parse_element(text.substr(eq + 1), alphabet);
  Relation r{lhs - rhs, std::nullopt, std::string(text)};
  if (lhs.size() == 1 && lhs.begin()->second.is_one()) r.declared_lead = lhs.begin()->first;
  return r;
}

Scalar Scalar::parse(std::string_view text) {
  Element e = Parser(text, {nullptr}).run().as_element();
  return e.constant_term();
}

}  // namespace qbundle
