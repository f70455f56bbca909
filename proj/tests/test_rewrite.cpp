#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qbundle/error.hpp"
#include "qbundle/expr.hpp"
#include "qbundle/rewrite.hpp"

using namespace qbundle;

namespace {

const Alphabet& su2() {
  static Alphabet a({"gamma", "gamma_star", "alpha", "alpha_star"});
  return a;
}

std::vector<Relation> su2_relations() {
  std::vector<Relation> out;
  for (const char* r : {"alpha*gamma = q*gamma*alpha", "gamma_star*gamma = gamma*gamma_star",
                        "alpha*gamma_star = q*gamma_star*alpha", "alpha_star*alpha = 1 - gamma*gamma_star",
                        "alpha*alpha_star = 1 - q^2*gamma*gamma_star",
                        "alpha_star*gamma_star = q^-1*gamma_star*alpha_star",
                        "alpha_star*gamma = q^-1*gamma*alpha_star"}) {
    out.push_back(parse_relation(r, su2()));
  }
  return out;
}

Element E(const char* text) { return parse_element(text, su2()); }

// Oracle: follow every possible one-step rewrite from every term and collect
// all irreducible results. A confluent system has exactly one.
void all_paths(const Element& x, const std::vector<Rule>& rules, std::set<std::string>& seen,
               std::set<std::string>& finals) {
  std::string key = x.str(su2());
  if (!seen.insert(key).second) return;
  bool any = false;
  for (const auto& [w, c] : x) {
    for (const Rule& r : rules) {
      for (std::size_t p = 0; p + r.lhs.size() <= w.size(); ++p) {
        if (!w.contains_at(p, r.lhs)) continue;
        any = true;
        Element y = x;
        y.add(w, -c);
        Word a = w.subword(0, p), b = w.subword(p + r.lhs.size(), w.size() - p - r.lhs.size());
        y += Element(a) * r.rhs * Element(b) * c;
        all_paths(y, rules, seen, finals);
      }
    }
  }
  if (!any) finals.insert(key);
}

Element random_element(std::mt19937& rng, std::size_t letters, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-2, 2), nterms(1, 4);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
  Element x;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Word w;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) w.push_back(static_cast<Letter>(letter(rng)));
    x.add(w, Scalar(coef(rng)) * Scalar::q().pow(deg(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("SUq2 completion adds no rules") {
  RewriteSystem rs = RewriteSystem::complete(su2_relations(), 4);
  CHECK(rs.rules().size() == 7);
  CHECK(rs.added_rules() == 0);
  CHECK(rs.unresolved_overlaps().empty());
  CHECK(rs.fully_confluent());
}

TEST_CASE("every rewriting path of every SUq2 overlap joins") {
  RewriteSystem rs = RewriteSystem::complete(su2_relations(), 4);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t c = 0; c < 4; ++c) {
        Word w{static_cast<Letter>(a), static_cast<Letter>(b), static_cast<Letter>(c)};
        std::set<std::string> seen, finals;
        all_paths(Element(w), rs.rules(), seen, finals);
        CHECK(finals.size() == 1);
        CHECK(*finals.begin() == rs.normal_form(w).str(su2()));
      }
    }
  }
}

TEST_CASE("normal forms in SUq2") {
  RewriteSystem rs = RewriteSystem::complete(su2_relations(), 4);
  CHECK(rs.normal_form(E("alpha*gamma")) == E("q*gamma*alpha"));
  CHECK(rs.normal_form(E("alpha*gamma")).str(su2()) == "q*gamma*alpha");
  CHECK(rs.normal_form(E("alpha*gamma*gamma_star")) == E("q^2*gamma*gamma_star*alpha"));
  CHECK(rs.normal_form(Element(Scalar(1))) == Element(Scalar(1)));
  CHECK(rs.is_zero_mod_ideal(E("alpha_star*alpha + gamma*gamma_star - 1")));
  CHECK_FALSE(rs.is_zero_mod_ideal(E("alpha")));
}

TEST_CASE("empty relation list gives the free algebra") {
  RewriteSystem rs = RewriteSystem::complete(std::vector<Element>{}, 3);
  CHECK(rs.rules().empty());
  CHECK(rs.normal_form(E("alpha*gamma")) == E("alpha*gamma"));
  Alphabet x({"x"});
  auto basis = rs.monomial_basis(1, 2);
  REQUIRE(basis.size() == 3);
  CHECK(x.word_str(basis[0]) == "1");
  CHECK(x.word_str(basis[1]) == "x");
  CHECK(x.word_str(basis[2]) == "x*x");
}

TEST_CASE("degree-incompatible orientation is rejected") {
  auto rels = su2_relations();
  rels.push_back(parse_relation("1 = alpha_star*alpha + gamma*gamma_star", su2()));
  try {
    RewriteSystem::complete(rels, 4);
    FAIL("expected DegreeIncompatibleRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeIncompatibleRelation);
    CHECK(std::string(e.what()).find("1 = alpha_star*alpha") != std::string::npos);
  }
}

TEST_CASE("monomial basis of SUq2") {
  RewriteSystem rs = RewriteSystem::complete(su2_relations(), 4);
  auto b1 = rs.monomial_basis(4, 1);
  CHECK(b1.size() == 5);
  // Oracle: all two-letter words not matching a rule leading word.
  std::size_t count = 0;
  for (Letter a = 0; a < 4; ++a) {
    for (Letter b = 0; b < 4; ++b) {
      Word w{a, b};
      bool leading = false;
      for (const Rule& r : rs.rules()) leading |= (r.lhs == w);
      count += !leading;
    }
  }
  CHECK(rs.monomial_basis(4, 2).size() == 5 + count);
  auto b3 = rs.monomial_basis(4, 3);
  CHECK(std::is_sorted(b3.begin(), b3.end()));
}

TEST_CASE("truncated completion refuses uncertified degrees") {
  Alphabet xy({"x", "y"});
  std::vector<Element> braid{parse_element("y*x*y - x*y*x", xy)};
  RewriteSystem rs = RewriteSystem::complete(braid, 4);
  CHECK_FALSE(rs.fully_confluent());
  CHECK(rs.unresolved_overlaps().empty());
  CHECK_NOTHROW(rs.normal_form(parse_element("y*x*y*x", xy)));
  try {
    rs.normal_form(parse_element("y*x*y*x*y", xy));
    FAIL("expected DegreeBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeBoundExceeded);
  }
}

TEST_CASE("rule cap") {
  Alphabet xy({"x", "y"});
  std::vector<Element> braid{parse_element("y*x*y - x*y*x", xy)};
  CHECK_THROWS_AS(RewriteSystem::complete(braid, 12, 3), Error);
}

TEST_CASE("Church-Rosser, linearity and multiplicativity on random elements") {
  RewriteSystem rs = RewriteSystem::complete(su2_relations(), 4);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Element x = random_element(rng, 4, 4);
    Element left = rs.normal_form(x, Strategy::Leftmost);
    CHECK(rs.normal_form(x, Strategy::Rightmost) == left);
    CHECK(rs.normal_form(x, Strategy::Random, i) == left);
    CHECK(rs.normal_form(x) == left);
    CHECK(rs.normal_form(left) == left);
    Element y = random_element(rng, 4, 2), z = random_element(rng, 4, 2);
    Scalar a = Scalar::q() + 1;
    CHECK(rs.normal_form(y * a + z) == rs.normal_form(y) * a + rs.normal_form(z));
    CHECK(rs.normal_form(rs.normal_form(y) * rs.normal_form(z)) == rs.normal_form(y * z));
  }
}
