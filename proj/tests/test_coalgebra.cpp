#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbundle/coalgebra.hpp"
#include "qbundle/error.hpp"
#include "qbundle/examples.hpp"
#include "qbundle/expr.hpp"

using namespace qbundle;

namespace {

TensorElement t2(const Algebra& a, const char* text) { return reduce_legs(a.presentation().parse2(text), {reducer(a), reducer(a)}); }

}  // namespace

TEST_CASE("Uq2 coproduct and counit") {
  const Algebra& u2 = shared_algebra("Uq2");
  CHECK(u2.coproduct(u2.parse("gamma")) == t2(u2, "gamma (x) alpha + alpha_star*u_star (x) gamma"));
  CHECK(u2.coproduct(Element(Scalar(1))) == t2(u2, "1 (x) 1"));
  CHECK(u2.counit(u2.parse("gamma")) == Scalar(0));
  CHECK(u2.counit(Element(Scalar(1))) == Scalar(1));
  CHECK(u2.antipode(Element(Scalar(1))) == Element(Scalar(1)));
}

TEST_CASE("counit on xi and zeta") {
  const FlagExample& f = flag_example();
  CHECK(f.u2.counit(f.xi) == Scalar(0));
  CHECK(f.u2.counit(f.zeta) == Scalar::s());
}

TEST_CASE("Uq4 coproduct of t_ij is the matrix coproduct") {
  const Algebra& u4 = shared_algebra("Uq4");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      TensorElement want(2);
      for (int k = 1; k <= 4; ++k) {
        want += TensorElement::pure({u4.parse("t" + std::to_string(i) + std::to_string(k)),
                                     u4.parse("t" + std::to_string(k) + std::to_string(j))});
      }
      CHECK(u4.coproduct(u4.parse("t" + std::to_string(i) + std::to_string(j))) == want);
    }
  }
}

TEST_CASE("only the antipode with the Dqinv factor satisfies the antipode laws") {
  const Algebra& u4 = shared_algebra("Uq4");
  auto failures = [&](const char* variant) {
    int n = 0;
    for (const auto& [label, r] : antipode_residues(u4, builtin_variant("Uq4", variant))) n += !r.is_zero();
    return n;
  };
  CHECK(failures("antipode:with_Dqinv") == 0);
  CHECK(failures("antipode:printed") > 0);
}

TEST_CASE("bialgebra axioms") {
  CHECK(check_bialgebra(shared_algebra("Uq2")).ok());
  CHECK(check_bialgebra(shared_algebra("SUq2")).ok());
  Report su3 = check_bialgebra(shared_algebra("SUq3"));
  CHECK(su3.ok());
  CHECK(su3.count(Status::Skipped) == 0);
}

TEST_CASE("a corrupted coproduct image fails with a witness") {
  Presentation p = builtin("Uq2");
  Letter g = p.alphabet.at("gamma");
  p.hopf->delta[g] = p.parse2("gamma (x) alpha + alpha_star (x) gamma");
  Algebra a(p);
  Report r = check_bialgebra(a);
  CHECK_FALSE(r.ok());
  for (const auto& c : r.checks) {
    if (c.status == Status::Fail) CHECK_FALSE(c.witness.empty());
  }
}

TEST_CASE("the flag quotient D") {
  const FlagExample& f = flag_example();
  const QuotientCoalgebra& d = f.quotient;
  const Algebra& u2 = f.u2;
  CHECK(d.reduce(u2.mul(f.xi, u2.parse("alpha"))).is_zero());
  CHECK_FALSE(d.reduce(Element(Scalar(1))).is_zero());
  for (const char* w : {"1", "alpha", "gamma_star", "u*alpha_star", "gamma*alpha"}) {
    Element x = u2.parse(w);
    Element r = d.reduce(u2.mul(u2.parse("gamma"), x)) + Scalar::q() * d.reduce(u2.mul(u2.parse("gamma_star*u_star"), x));
    CHECK_MESSAGE(r.is_zero(), w);
  }
  CHECK(d.coproduct(Element(Scalar(1))) == TensorElement::pure({Element(Scalar(1)), Element(Scalar(1))}));
  Element d01 = u2.parse("alpha + s*gamma");
  CHECK(d.coproduct(d01) == TensorElement::pure({d.reduce(d01), d.reduce(d01)}));
  Element u3 = u2.parse("u^3");
  CHECK(d.coproduct(u3) == TensorElement::pure({d.reduce(u3), d.reduce(u3)}));
  CHECK(d.is_grouplike(Element(Scalar(1))));
  CHECK(d.is_grouplike(d01));
  CHECK_FALSE(d.is_grouplike(u2.parse("gamma")));
  CHECK_THROWS_AS(d.is_grouplike(f.xi), Error);
  CHECK_FALSE(d.coideal_failure().has_value());
}

TEST_CASE("d_{m,n} representatives") {
  const Algebra& u2 = shared_algebra("Uq2");
  CHECK(d_element(u2, 0, 1, 1) == u2.parse("alpha - q*s*gamma_star*u_star"));
  CHECK(d_element(u2, 0, 1, 2) == u2.parse("alpha + s*gamma"));
  CHECK(d_element(u2, 3, 0, 1) == u2.parse("u^3"));
  CHECK(d_element(u2, 0, -1, 1) == u2.parse("alpha_star + q^-1*s*gamma_star"));
  const FlagExample& f = flag_example();
  CHECK(f.quotient.reduce(d_element(u2, 0, 1, 1) - d_element(u2, 0, 1, 2)).is_zero());
}
