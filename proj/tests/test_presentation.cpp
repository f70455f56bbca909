#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qbundle/coalgebra.hpp"
#include "qbundle/error.hpp"
#include "qbundle/examples.hpp"
#include "qbundle/expr.hpp"
#include "qbundle/presentation.hpp"

using namespace qbundle;

namespace {

bool throws_kind(ErrorKind k, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_CASE("SUq2 generators and the commutation alpha gamma = q gamma alpha") {
  Presentation p = builtin("SUq2");
  CHECK(p.alphabet.size() == 4);
  const Algebra& a = shared_algebra("SUq2");
  CHECK(a.parse("alpha*gamma") == a.parse("q*gamma*alpha"));
  CHECK(a.str(a.parse("alpha*gamma")) == "q*gamma*alpha");
  CHECK(a.parse("alpha*gamma*gamma_star") == a.parse("q^2*gamma*gamma_star*alpha"));
}

TEST_CASE("star on SUq2 is a letter involution and anti-multiplicative") {
  const Algebra& a = shared_algebra("SUq2");
  CHECK(a.star(a.parse("gamma")) == a.parse("gamma_star"));
  CHECK(a.star(a.parse("alpha*gamma")) == a.parse("gamma_star*alpha_star"));
  CHECK(a.star(a.parse("q*s*alpha")) == a.parse("q*s*alpha_star"));
}

TEST_CASE("SUq3 star is involutive on u11") {
  const Algebra& a = shared_algebra("SUq3");
  Element u11 = a.parse("u11");
  CHECK(a.star(a.star(u11)) == u11);
}

TEST_CASE("the U_q(4) quantum determinant has 24 terms of degree 4") {
  // Oracle: sum over permutations with (-q)^inversions, built here.
  Presentation p = builtin("Uq4");
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 1);
  Element det;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
    }
    Element w(Scalar(1));
    for (int i = 0; i < 4; ++i) w = w * p.parse("t" + std::to_string(i + 1) + std::to_string(perm[i]));
    Scalar c(1);
    for (int k = 0; k < inv; ++k) c = c * (-Scalar::q());
    det.add_scaled(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(det.size() == 24);
  CHECK(det.degree() == 4);
  const Algebra& u4 = shared_algebra("Uq4");
  CHECK(u4.nf(det) == u4.antipode(u4.parse("Dqinv")));
}

TEST_CASE("CP1qs at s = 0 is the standard Podles sphere") {
  Presentation g = builtin("CP1qs"), st = builtin("CPq1");
  REQUIRE(g.relations.size() == st.relations.size());
  REQUIRE(g.alphabet.names() == st.alphabet.names());
  for (std::size_t i = 0; i < g.relations.size(); ++i) {
    CHECK(g.relations[i].poly.subst_s(Rational(0)) == st.relations[i].poly);
  }
}

TEST_CASE("builtin names") {
  for (const auto& n : builtin_names()) CHECK_NOTHROW(builtin(n).validate());
  CHECK(throws_kind(ErrorKind::UnknownBuiltin, [] { builtin("SUq5"); }));
}

TEST_CASE("loading a q-plane") {
  Presentation p = load_presentation(R"({"name": "qplane", "generators": ["x", "y"], "relations": ["y*x = q*x*y"]})");
  CHECK(p.relations.size() == 1);
  Algebra a(p);
  CHECK(a.parse("y*x") == a.parse("q*x*y"));
}

TEST_CASE("undeclared symbols are parse errors") {
  CHECK(throws_kind(ErrorKind::ParseError, [] {
    load_presentation(R"({"name": "bad", "generators": ["x", "y"], "relations": ["y*z = q*x*y"]})");
  }));
  CHECK(throws_kind(ErrorKind::ParseError, [] { load_presentation("{not json"); }));
}

TEST_CASE("serialize then load gives the same presentation") {
  for (const char* n : {"SUq2", "Uq2", "CP1qs", "Sq4"}) {
    Presentation p = builtin(n);
    CHECK(load_presentation(serialize(p)) == p);
  }
}

TEST_CASE("star consistency") {
  CHECK(check_star_consistency(shared_algebra("SUq2")).ok());
  CHECK(check_star_consistency(shared_algebra("Sq7")).ok());
}

TEST_CASE("a corrupted relation set fails star consistency with a witness") {
  Presentation p = builtin("SUq2");
  p.relations[0] = parse_relation("alpha*gamma = q^2*gamma*alpha", p.alphabet);
  Algebra a(p);
  Report r = check_star_consistency(a);
  CHECK_FALSE(r.ok());
  for (const auto& c : r.checks) {
    if (c.status == Status::Fail) CHECK_FALSE(c.witness.empty());
  }
}

TEST_CASE("embeddings kill every relation") {
  const TwistorExample& tw = twistor_example();
  for (const auto& [label, r] : morphism_residues(tw.s4_embed)) CHECK_MESSAGE(r.is_zero(), label);
  const Algebra& cp = shared_algebra("CP1qs");
  Morphism m = Morphism::named(cp, shared_algebra("Uq2"), "embed");
  for (const auto& [label, r] : morphism_residues(m)) CHECK_MESSAGE(r.is_zero(), label);
}

TEST_CASE("the Podles relations hold for xi and zeta in Uq2") {
  const Algebra& u2 = shared_algebra("Uq2");
  Element s = Element(Scalar::s());
  Element xi = u2.parse("(1 - s^2)*gamma*gamma_star + s*(gamma*alpha*u + alpha_star*gamma_star*u_star)");
  Element zeta = u2.parse("(1 - s^2)*alpha*gamma_star + s*(alpha^2*u - q*gamma_star^2*u_star)");
  Element zs = u2.star(zeta);
  Element one(Scalar(1));
  CHECK(u2.nf(zeta * xi - Scalar::q() * Scalar::q() * xi * zeta).is_zero());
  CHECK(u2.nf(zs * zeta - (s * s + xi) * (one - xi)).is_zero());
  CHECK(u2.nf(zeta * zs - (s * s + Scalar::q() * Scalar::q() * xi) * (one - Scalar::q() * Scalar::q() * xi)).is_zero());
}
