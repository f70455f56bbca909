#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbundle/comodule.hpp"
#include "qbundle/error.hpp"
#include "qbundle/examples.hpp"

using namespace qbundle;

namespace {

TensorElement pure(const Element& a, const Element& b) { return TensorElement::pure({a, b}); }

const Element kOne(Scalar(1));

}  // namespace

TEST_CASE("flag coaction") {
  const FlagExample& f = flag_example();
  const Bundle& b = f.bundle;
  CHECK(b.rho(kOne) == pure(kOne, b.e()));
  Element u = f.u2.parse("u");
  for (const char* g : {"u11", "u21", "u31"}) CHECK(b.rho(f.su3.parse(g)) == pure(f.su3.parse(g), u));
}

TEST_CASE("flag entwining") {
  const FlagExample& f = flag_example();
  const Bundle& b = f.bundle;
  Element alpha = f.u2.parse("alpha"), u11 = f.su3.parse("u11");
  CHECK(b.psi(alpha, u11) == pure(u11, f.u2.parse("alpha*u")));
  CHECK(b.psi_direct(alpha, u11) == pure(u11, f.u2.parse("alpha*u")));
  for (const char* c : {"1", "alpha", "gamma_star*u"}) {
    Element x = f.u2.parse(c);
    CHECK(b.psi(x, kOne) == pure(kOne, x));
    CHECK(b.psi_inv(kOne, x) == pure(x, kOne));
  }
  for (const char* p : {"u12", "u33"}) CHECK(b.psi(b.e(), f.su3.parse(p)) == b.rho(f.su3.parse(p)));
  CHECK(b.can(pure(kOne, kOne)) == pure(kOne, b.e()));
  Element u23 = f.su3.parse("u23");
  CHECK(b.can(pure(kOne, u23)) == b.rho(u23));
}

TEST_CASE("pushforward of the Uq2 coproduct along pi") {
  const FlagExample& f = flag_example();
  Coaction bar = Coaction::regular(f.c).pushforward(f.d);
  Element e_bar = f.bundle.e_bar();
  CHECK(bar(f.xi) == pure(f.xi, e_bar));
  for (const auto& g : {"u", "alpha", "gamma_star"}) {
    Element x = f.u2.parse(g);
    TensorElement t = bar(x);
    Element back = t.contract(1, [&](const Word& w) { return f.d.counit(Element(w)); }).as_element();
    CHECK(back == x);
  }
  CoinvariantBasis cb = coinvariants(bar, e_bar, 3);
  CHECK(cb.contains(f.xi));
  CHECK(cb.contains(f.zeta));
  CHECK(cb.contains(f.zeta_star));
  CHECK(cb.contains(kOne));
  CHECK_FALSE(cb.contains(f.u2.parse("alpha")));
}

TEST_CASE("pushforward along a quotient of another algebra") {
  const FlagExample& f = flag_example();
  const TwistorExample& tw = twistor_example();
  CHECK_THROWS_AS(tw.bundle.rho_coaction().pushforward(f.d), Error);
  try {
    (void)tw.bundle.rho_coaction().pushforward(f.d);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleTargets);
  }
}

TEST_CASE("twistor coaction and Galois map") {
  const TwistorExample& tw = twistor_example();
  const Bundle& b = tw.bundle;
  Element z1 = tw.s7.parse("z1"), z2 = tw.s7.parse("z2");
  TensorElement want = pure(z1, tw.su2.parse("alpha")) + pure(z2, tw.su2.parse("gamma"));
  CHECK(b.rho(z1) == want);
  CHECK(b.can(pure(kOne, z1)) == want);
  CHECK(b.rho(kOne) == pure(kOne, b.e()));
  TensorElement l = b.Lambda(pure(kOne, kOne));
  CHECK(l == TensorElement::pure({b.e_bar(), kOne, kOne}));
}

TEST_CASE("B contains a, b, R and lambda fixes them") {
  const TwistorExample& tw = twistor_example();
  const Bundle& b = tw.bundle;
  CoinvariantBasis B = b.B(2);
  for (const auto& x : tw.s4_embed.images()) {
    CHECK(B.contains(x));
    CHECK(b.lambda(x) == pure(b.e(), x));
  }
  Element R = tw.s7.parse("z1*z1_star + z2*z2_star");
  CHECK(B.contains(R));
  CHECK_FALSE(B.contains(tw.s7.parse("z1")));
}

TEST_CASE("xi and zeta lie in the fibre X") {
  const FlagExample& f = flag_example();
  CoinvariantBasis X = f.bundle.X(3);
  CHECK(X.contains(f.xi));
  CHECK(X.contains(f.zeta));
}
