#pragma once

// Helpers shared by the suite sources; not installed.

#include <cstdio>
#include <string>
#include <vector>

#include "qbundle/suites.hpp"

namespace qbundle::detail {

using Specs = std::vector<CheckSpec>;

inline std::string pad(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

/// Witness text, shortened for the report.
inline std::string clip(std::string s) {
  constexpr std::size_t kMax = 600;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

inline void append(Specs& out, const std::string& prefix, Specs more) {
  for (auto& s : more) {
    s.id = prefix + s.id;
    out.push_back(std::move(s));
  }
}

inline Verdict expect_zero(const Element& r, const Algebra& a, std::string note = "") {
  if (r.is_zero()) return Verdict::pass(std::move(note));
  return Verdict::fail(clip(a.str(r)), std::move(note));
}

inline Verdict expect_zero(const TensorElement& r, const std::vector<const Algebra*>& legs, std::string note = "") {
  if (r.is_zero()) return Verdict::pass(std::move(note));
  std::vector<const Alphabet*> al;
  for (const auto* a : legs) al.push_back(&a->alphabet());
  return Verdict::fail(clip(r.str(al)), std::move(note));
}

inline std::string gen_name(const Algebra& a, std::size_t g) { return a.alphabet().name(static_cast<Letter>(g)); }

inline std::vector<Element> generators(const Algebra& a) {
  std::vector<Element> out;
  for (std::size_t g = 0; g < a.alphabet().size(); ++g) out.push_back(Element::letter(static_cast<Letter>(g)));
  return out;
}

inline std::vector<Word> words(const Algebra& a, int degree) {
  return a.rewrite().monomial_basis(a.alphabet().size(), degree);
}

/// (id (x) eps) on P (x) C.
inline Element counit_leg(const TensorElement& t, const Coalgebra& c) {
  return t.contract(1, [&c](const Word& w) { return c.counit(Element(w)); }).as_element();
}

Specs theorem_specs(Example example, const SuiteOptions& options);

}  // namespace qbundle::detail
