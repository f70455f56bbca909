#include "qbundle/examples.hpp"

#include <map>

#include "qbundle/error.hpp"

namespace qbundle {

const Algebra& shared_algebra(const std::string& name) {
  static const std::vector<std::string>& names = builtin_names();
  static std::unique_ptr<std::once_flag[]> flags(new std::once_flag[names.size()]);
  static std::vector<std::unique_ptr<Algebra>> algebras(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != name) continue;
    std::call_once(flags[i], [i] { algebras[i] = std::make_unique<Algebra>(builtin(names[i])); });
    return *algebras[i];
  }
  throw Error(ErrorKind::UnknownBuiltin, name);
}

namespace {

std::vector<TensorElement> flag_delta(const Algebra& su3, const Morphism& v) {
  std::vector<TensorElement> out;
  auto u = [](int i, int j) { return "u" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      TensorElement d(2);
      for (int k = 1; k <= 3; ++k) {
        const Element& vk = v.images()[su3.gen(u(k, j))];
        d += TensorElement::pure({Element::letter(su3.gen(u(i, k))), vk});
      }
      out.push_back(d);
    }
  }
  return out;
}

std::vector<Element> flag_ideal(const Algebra& u2, const Morphism& embed) {
  const auto& im = embed.images();
  Element s = Element(Scalar::s());
  return {im[0], u2.nf(im[1] - s), u2.nf(im[2] - s)};
}

DKData flag_data(const FlagExample& f) {
  DKData d;
  d.p = &f.su3;
  d.h = &f.u2;
  d.c = &f.c;
  d.d = &f.d;
  d.delta = flag_delta(f.su3, f.v);
  const Algebra* u2 = &f.u2;
  const QuotientCoalgebra* q = &f.quotient;
  d.act = [u2](const Element& c, Letter g) { return u2->mul(c, Element::letter(g)); };
  d.act_d = [u2, q](const Element& x, Letter g) { return q->reduce(u2->mul(x, Element::letter(g))); };
  d.e = Element(Scalar(1));
  d.pi = [q](const Element& x) { return q->reduce(x); };
  return d;
}

std::string t(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }

std::vector<Element> twistor_ideal(const Algebra& u4) {
  std::vector<Element> out;
  for (const auto& g : u4.presentation().quotients.at("pi_SUq2").ideal_generators) out.push_back(u4.parse(g));
  return out;
}

std::vector<Element> block_images(const Algebra& u4, const Algebra& su2, const std::map<std::string, std::string>& m) {
  std::vector<Element> out(u4.alphabet().size());
  for (const auto& [g, x] : m) out[u4.gen(g)] = su2.parse(x);
  return out;
}

DKData twistor_data(const TwistorExample& tw) {
  const Algebra& s7 = tw.s7;
  const Algebra& u4 = tw.u4;
  DKData dk;
  dk.p = &s7;
  dk.h = &u4;
  dk.c = &tw.c;
  dk.d = &tw.d;
  // z_i -> sum_k z_k (x) t_ki and z_i^* -> sum_k z_k^* (x) t_ki^*.
  for (int i = 1; i <= 4; ++i) {
    TensorElement dz(2);
    for (int k = 1; k <= 4; ++k) {
      dz += TensorElement::pure({s7.parse("z" + std::to_string(k)), u4.parse(t(k, i))});
    }
    dk.delta.push_back(dz);
  }
  for (int i = 1; i <= 4; ++i) {
    TensorElement dz(2);
    for (int k = 1; k <= 4; ++k) {
      dz += TensorElement::pure({s7.parse("z" + std::to_string(k) + "_star"), u4.star(u4.parse(t(k, i)))});
    }
    dk.delta.push_back(dz);
  }
  const TwistorExample* p = &tw;
  dk.act = [p](const Element& x, Letter g) { return p->act(x, g); };
  dk.act_d = [p](const Element& x, Letter g) { return p->u1.mul(x, p->mu.images()[g]); };
  dk.e = Element(Scalar(1));
  dk.pi = [p](const Element& x) { return p->pi_u1(x); };
  return dk;
}

}  // namespace

FlagExample::FlagExample(int slice)
    : su3(shared_algebra("SUq3")),
      u2(shared_algebra("Uq2")),
      cp1(shared_algebra("CP1qs")),
      embed(Morphism::named(cp1, u2, "embed")),
      v(Morphism::named(su3, u2, "v")),
      xi(embed.images()[0]),
      zeta(embed.images()[1]),
      zeta_star(embed.images()[2]),
      ideal(flag_ideal(u2, embed)),
      quotient(u2, ideal, slice),
      c(u2),
      d(quotient),
      bundle(flag_data(*this)) {}

TwistorExample::TwistorExample()
    : s7(shared_algebra("Sq7")),
      u4(shared_algebra("Uq4")),
      su2(shared_algebra("SUq2")),
      u1(shared_algebra("U1")),
      s4(shared_algebra("Sq4")),
      embed(Morphism::named(s7, u4, "embed")),
      s4_embed(Morphism::named(s4, s7, "embed")),
      pi_u1(Morphism::named(su2, u1, "pi_U1")),
      mu(Morphism::named(u4, u1, "mu")),
      m_ideal(twistor_ideal(u4)),
      upper(block_images(u4, su2, {{"t11", "alpha"}, {"t12", "-q*gamma_star"}, {"t21", "gamma"}, {"t22", "alpha_star"}})),
      lower(block_images(u4, su2, {{"t33", "alpha_star"}, {"t34", "-gamma"}, {"t43", "q*gamma_star"}, {"t44", "alpha"}})),
      c(su2),
      d(u1),
      bundle(twistor_data(*this)) {}

Element TwistorExample::act(const Element& x, Letter g) const {
  if (!upper[g].is_zero()) return su2.mul(x, upper[g]);
  if (!lower[g].is_zero()) return su2.mul(lower[g], x);
  if (u4.alphabet().name(g) == "Dqinv") return x;
  return {};
}

const FlagExample& flag_example(int slice) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Lazy<FlagExample>>> cache;
  Lazy<FlagExample>* lazy;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[slice];
    if (!slot) slot = std::make_unique<Lazy<FlagExample>>([slice] { return std::make_unique<FlagExample>(slice); });
    lazy = slot.get();
  }
  return lazy->get();
}

const TwistorExample& twistor_example() {
  static Lazy<TwistorExample> lazy([] { return std::make_unique<TwistorExample>(); });
  return lazy.get();
}

}  // namespace qbundle
