#include "qbundle/comodule.hpp"

#include "qbundle/error.hpp"

namespace qbundle {

namespace {

TensorElement pure2(const Element& a, const Element& b) { return TensorElement::pure({a, b}); }

TensorElement prefix(const Word& w, const TensorElement& t) {
  return tensor(TensorElement::from_element(Element(w)), t);
}

TensorElement suffix(const TensorElement& t, const Word& w) {
  return tensor(t, TensorElement::from_element(Element(w)));
}

}  // namespace

Coaction Coaction::multiplicative(const Algebra& source, const Coalgebra& target, std::vector<TensorElement> images) {
  LegReducer rs = reducer(source);
  LegReducer rt = [&target](const Element& x) { return target.reduce(x); };
  return Coaction(source, target, [images = std::move(images), rs, rt](const Element& x) {
    return extend_multiplicative(x, images, {rs, rt});
  });
}

Coaction Coaction::regular(const Coalgebra& c) {
  return Coaction(c.base(), c, [&c](const Element& x) { return c.coproduct(x); });
}

Coaction Coaction::pushforward(const Coalgebra& d, LinearMap pi) const {
  return Coaction(*source_, d, [f = f_, pi = std::move(pi)](const Element& x) {
    return f(x).map_leg_element(1, [&pi](const Word& w) { return pi(Element(w)); });
  });
}

Coaction Coaction::pushforward(const QuotientView& q) const {
  if (&q.base() != &target_->base()) {
    throw Error(ErrorKind::IncompatibleTargets, "quotient of " + q.base().name() + " applied to a coaction into " +
                                                    target_->name());
  }
  return pushforward(q, [&q](const Element& x) { return q.reduce(x); });
}

Coaction Coaction::pushforward(const Morphism& m, const Coalgebra& d) const {
  if (&m.source() != &target_->base() || &m.target() != &d.base()) {
    throw Error(ErrorKind::IncompatibleTargets, "map " + m.source().name() + " -> " + m.target().name() +
                                                    " applied to a coaction into " + target_->name() + " towards " +
                                                    d.name());
  }
  return pushforward(d, [&m](const Element& x) { return m(x); });
}

bool CoinvariantBasis::contains(const Element& x) const {
  EchelonBasis<Element> b;
  for (const auto& v : basis) b.insert(v);
  return b.contains(x);
}

CoinvariantBasis solve_on_words(const Algebra& a, int degree, const std::function<TensorElement(const Word&)>& f) {
  CoinvariantBasis out;
  out.degree = degree;
  auto words = a.rewrite().monomial_basis(a.alphabet().size(), degree);
  out.basis = kernel<TensorElement, Element>(words, f);
  return out;
}

CoinvariantBasis coinvariants(const Coaction& co, const Element& e, int degree) {
  Element eb = co.target().reduce(e);
  CoinvariantBasis out = solve_on_words(co.source(), degree, [&](const Word& w) {
    return co(Element(w)) - pure2(Element(w), eb);
  });
  out.group_like = eb;
  return out;
}

Bundle::Bundle(DKData data) : d_(std::move(data)) {
  d_.e = d_.c->reduce(d_.e);
  if (d_.h->has_hopf() && !d_.h->presentation().hopf->antipode_inverse.empty()) {
    for (std::size_t g = 0; g < d_.h->alphabet().size(); ++g) {
      s_inv_.push_back(d_.h->antipode_inverse(Element::letter(static_cast<Letter>(g))));
    }
  }
}

Element Bundle::act(const Element& c, const Element& h) const {
  Element out;
  for (const auto& [w, k] : h) {
    Element x = c;
    for (Letter g : w) {
      x = d_.act(x, g);
      if (x.is_zero()) break;
    }
    out.add_scaled(x, k);
  }
  return out;
}

Element Bundle::act_antipode_inverse(const Element& c, const Element& h) const {
  if (s_inv_.empty()) throw Error(ErrorKind::NoInverseAntipode, H().name() + " has no inverse antipode");
  Element out;
  for (const auto& [w, k] : h) {
    Element x = c;
    for (std::size_t i = w.size(); i-- > 0 && !x.is_zero();) x = act(x, s_inv_[w[i]]);
    out.add_scaled(x, k);
  }
  return out;
}

Element Bundle::act_d(const Element& d, const Element& h) const {
  Element out;
  for (const auto& [w, k] : h) {
    Element x = d;
    for (Letter g : w) {
      x = d_.act_d(x, g);
      if (x.is_zero()) break;
    }
    out.add_scaled(x, k);
  }
  return out;
}

Element Bundle::act_d_antipode_inverse(const Element& d, const Element& h) const {
  if (s_inv_.empty()) throw Error(ErrorKind::NoInverseAntipode, H().name() + " has no inverse antipode");
  Element out;
  for (const auto& [w, k] : h) {
    Element x = d;
    for (std::size_t i = w.size(); i-- > 0 && !x.is_zero();) x = act_d(x, s_inv_[w[i]]);
    out.add_scaled(x, k);
  }
  return out;
}

TensorElement Bundle::delta(const Element& p) const {
  return extend_multiplicative(P().nf(p), d_.delta, {reducer(P()), reducer(H())});
}

TensorElement Bundle::psi(const Element& c, const Element& p) const {
  Element cc = C().reduce(c);
  TensorElement out(2);
  for (const auto& [w, k] : P().nf(p)) {
    TensorElement state = pure2(Element(Scalar(1)), cc);
    for (Letter g : w) {
      TensorElement next(2);
      for (const auto& [sk, x] : state) {
        for (const auto& [dk, y] : d_.delta[g]) {
          Element pl = P().nf(Element(sk[0]) * Element(dk[0]));
          if (pl.is_zero()) continue;
          Element cl = act(Element(sk[1]), Element(dk[1]));
          if (cl.is_zero()) continue;
          next.add_scaled(pure2(pl, cl), x * y);
        }
      }
      state = std::move(next);
    }
    out.add_scaled(state, k);
  }
  return out;
}

TensorElement Bundle::psi(const TensorElement& cp) const {
  TensorElement out(2);
  for (const auto& [k, x] : cp) out.add_scaled(psi(Element(k[0]), Element(k[1])), x);
  return out;
}

TensorElement Bundle::psi_inv(const Element& p, const Element& c) const {
  Element cc = C().reduce(c);
  TensorElement out(2);
  for (const auto& [w, k] : P().nf(p)) {
    TensorElement state = pure2(cc, Element(Scalar(1)));
    for (std::size_t i = w.size(); i-- > 0;) {
      TensorElement next(2);
      for (const auto& [sk, x] : state) {
        for (const auto& [dk, y] : d_.delta[w[i]]) {
          Element pl = P().nf(Element(dk[0]) * Element(sk[1]));
          if (pl.is_zero()) continue;
          Element cl = act_antipode_inverse(Element(sk[0]), Element(dk[1]));
          if (cl.is_zero()) continue;
          next.add_scaled(pure2(cl, pl), x * y);
        }
      }
      state = std::move(next);
    }
    out.add_scaled(state, k);
  }
  return out;
}

TensorElement Bundle::psi_inv(const TensorElement& pc) const {
  TensorElement out(2);
  for (const auto& [k, x] : pc) out.add_scaled(psi_inv(Element(k[0]), Element(k[1])), x);
  return out;
}

TensorElement Bundle::psi_inv_bar(const Element& p, const Element& d) const {
  Element dd = d_.pi(d);
  TensorElement out(2);
  for (const auto& [w, k] : P().nf(p)) {
    TensorElement state = pure2(dd, Element(Scalar(1)));
    for (std::size_t i = w.size(); i-- > 0;) {
      TensorElement next(2);
      for (const auto& [sk, x] : state) {
        for (const auto& [dk, y] : d_.delta[w[i]]) {
          Element pl = P().nf(Element(dk[0]) * Element(sk[1]));
          if (pl.is_zero()) continue;
          Element cl = act_d_antipode_inverse(Element(sk[0]), Element(dk[1]));
          if (cl.is_zero()) continue;
          next.add_scaled(pure2(cl, pl), x * y);
        }
      }
      state = std::move(next);
    }
    out.add_scaled(state, k);
  }
  return out;
}

TensorElement Bundle::psi_direct(const Element& c, const Element& p) const {
  Element cc = C().reduce(c);
  TensorElement out(2);
  for (const auto& [k, x] : delta(p)) out.add_scaled(pure2(Element(k[0]), act(cc, Element(k[1]))), x);
  return out;
}

TensorElement Bundle::rho_bar(const Element& p) const {
  return rho(p).map_leg_element(1, [this](const Word& w) { return d_.pi(Element(w)); });
}

TensorElement Bundle::can(const TensorElement& pp) const {
  TensorElement out(2);
  for (const auto& [k, x] : pp) {
    for (const auto& [rk, y] : rho(Element(k[1]))) {
      out.add_scaled(pure2(P().nf(Element(k[0]) * Element(rk[0])), Element(rk[1])), x * y);
    }
  }
  return out;
}

TensorElement Bundle::Lambda(const TensorElement& px) const {
  TensorElement out(3);
  for (const auto& [k, x] : px) {
    for (const auto& [dk, y] : C().coproduct(Element(k[1]))) {
      for (const auto& [ik, z] : psi_inv_bar(Element(k[0]), Element(dk[0]))) {
        out.add_scaled(TensorElement::pure({Element(ik[0]), Element(ik[1]), Element(dk[1])}), x * y * z);
      }
    }
  }
  return out;
}

TensorElement Bundle::Lambda_in_c(const TensorElement& px) const {
  TensorElement out(3);
  for (const auto& [k, x] : px) {
    for (const auto& [dk, y] : C().coproduct(Element(k[1]))) {
      for (const auto& [ik, z] : psi_inv(Element(k[0]), Element(dk[0]))) {
        Element dl = d_.pi(Element(ik[0]));
        if (dl.is_zero()) continue;
        out.add_scaled(TensorElement::pure({dl, Element(ik[1]), Element(dk[1])}), x * y * z);
      }
    }
  }
  return out;
}

TensorElement Bundle::Lambda_tail(const TensorElement& dpx) const {
  TensorElement out(4);
  for (const auto& [k, x] : dpx) {
    out.add_scaled(prefix(k[0], Lambda(pure2(Element(k[1]), Element(k[2])))), x);
  }
  return out;
}

Coaction Bundle::rho_coaction() const {
  return Coaction(P(), C(), [this](const Element& x) { return rho(x); });
}

Coaction Bundle::rho_bar_coaction() const {
  return Coaction(P(), D(), [this](const Element& x) { return rho_bar(x); });
}

Coaction Bundle::fibre_coaction() const { return Coaction::regular(C()).pushforward(D(), d_.pi); }

CoinvariantBasis Bundle::A_bar(int degree) const {
  Element eb = e_bar();
  CoinvariantBasis out = solve_on_words(P(), degree, [&](const Word& w) {
    TensorElement l = lambda(Element(w)).map_leg_element(0, [this](const Word& c) { return d_.pi(Element(c)); });
    return l - pure2(eb, Element(w));
  });
  out.group_like = eb;
  return out;
}

Bundle::CotensorResidue Bundle::cotensor_residue(const TensorElement& t, Over over) const {
  Element eb = e_bar();
  Coaction fibre = fibre_coaction();
  CotensorResidue r{TensorElement(3), TensorElement(3)};
  for (const auto& [k, x] : t) {
    Element c(k[1]);
    r.legs.add_scaled(prefix(k[0], fibre(c) - pure2(c, eb)), x);
    TensorElement dc = C().coproduct(c);
    if (over == Over::C) {
      r.coaction.add_scaled(suffix(rho(Element(k[0])), k[1]) - prefix(k[0], dc), x);
    } else {
      TensorElement dbar = dc.map_leg_element(0, [this](const Word& w) { return d_.pi(Element(w)); });
      r.coaction.add_scaled(suffix(rho_bar(Element(k[0])), k[1]) - prefix(k[0], dbar), x);
    }
  }
  return r;
}

std::vector<TensorElement> Bundle::cotensor_basis(const std::vector<Element>& x_basis, int degree, Over over) const {
  if (x_basis.size() > 255) throw Error(ErrorKind::Usage, "cotensor basis needs at most 255 fibre elements");
  auto words = P().rewrite().monomial_basis(P().alphabet().size(), degree);
  std::vector<TensorKey> keys;
  for (const auto& w : words) {
    for (std::size_t j = 0; j < x_basis.size(); ++j) {
      TensorKey k;
      k.arity = 2;
      k[0] = w;
      k[1] = Word::letter(static_cast<Letter>(j));
      keys.push_back(k);
    }
  }
  auto expand = [&](const TensorElement& comb) {
    TensorElement t(2);
    for (const auto& [k, x] : comb) t.add_scaled(pure2(Element(k[0]), C().reduce(x_basis[k[1][0]])), x);
    return t;
  };
  auto f = [&](const TensorKey& k) {
    TensorElement unit(2);
    unit.add(k, Scalar(1));
    return cotensor_residue(expand(unit), over).coaction;
  };
  std::vector<TensorElement> out;
  for (const auto& comb : kernel<TensorElement, TensorElement>(keys, f)) out.push_back(expand(comb));
  return out;
}

TensorElement Bundle::reduce_pc(const TensorElement& t) const {
  return reduce_legs(t, {reducer(P()), [this](const Element& x) { return C().reduce(x); }});
}

std::string Bundle::str_pc(const TensorElement& t) const { return str(t, {&P(), &C().base()}); }

std::string Bundle::str(const TensorElement& t, const std::vector<const Algebra*>& legs) const {
  std::vector<const Alphabet*> al;
  for (const auto* a : legs) al.push_back(&a->alphabet());
  return t.str(al);
}

}  // namespace qbundle
