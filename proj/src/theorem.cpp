#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "qbundle/suites.hpp"
#include "suite_util.hpp"

namespace qbundle {

using namespace detail;

namespace {

TensorElement pure2(const Element& a, const Element& b) { return TensorElement::pure({a, b}); }

/// p . t on the P-leg of t in P (x) ...
TensorElement left_mul(const Algebra& p, const Element& x, const TensorElement& t) {
  return t.map_leg_element(0, [&](const Word& w) { return p.mul(x, Element(w)); });
}

std::vector<const Algebra*> pc(const Bundle& b) { return {&b.P(), &b.C().base()}; }

/// Samples of C used on the C side of the battery: 1 and the generators.
std::vector<std::pair<std::string, Element>> c_samples(const Bundle& b) {
  std::vector<std::pair<std::string, Element>> out = {{"1", Element(Scalar(1))}};
  const Algebra& c = b.C().base();
  for (std::size_t g = 0; g < c.alphabet().size(); ++g) {
    out.emplace_back(gen_name(c, g), b.C().reduce(Element::letter(static_cast<Letter>(g))));
  }
  return out;
}

Verdict entwining_axioms(const Bundle& b, const Element& c, const Element& p) {
  const Algebra& P = b.P();
  const Coalgebra& C = b.C();
  const Algebra& cb = C.base();
  TensorElement cp = b.psi(c, p);
  for (const auto& p2 : generators(P)) {
    // psi(c (x) p p') = p_a psi(c^a (x) p')
    TensorElement rhs(2);
    for (const auto& [k, x] : cp) rhs.add_scaled(left_mul(P, Element(k[0]), b.psi(Element(k[1]), p2)), x);
    TensorElement lhs = b.psi(c, P.mul(p, p2));
    if (!(lhs == rhs)) return expect_zero(lhs - rhs, pc(b), "product axiom with " + P.str(p2));
  }
  TensorElement unit = b.psi(c, Element(Scalar(1))) - pure2(Element(Scalar(1)), C.reduce(c));
  if (!unit.is_zero()) return expect_zero(unit, pc(b), "unit axiom");
  // (id (x) Delta) psi = (psi (x) id)(id (x) psi)(Delta (x) id)
  TensorElement lhs = cp.map_leg(1, [&](const Word& w) { return C.coproduct(Element(w)); });
  TensorElement rhs(3);
  for (const auto& [dk, x] : C.coproduct(c)) {
    for (const auto& [k2, y] : b.psi(Element(dk[1]), p)) {
      rhs.add_scaled(tensor(b.psi(Element(dk[0]), Element(k2[0])), TensorElement::pure({Element(k2[1])})), x * y);
    }
  }
  if (!(lhs == rhs)) return expect_zero(lhs - rhs, {&P, &cb, &cb}, "coproduct axiom");
  Element eps = counit_leg(cp, C) - P.nf(p) * C.counit(c);
  if (!eps.is_zero()) return expect_zero(eps, P, "counit axiom");
  return Verdict::pass();
}

Verdict inverse_laws(const Bundle& b, const Element& c, const Element& p) {
  TensorElement cp = pure2(b.C().reduce(c), b.P().nf(p));
  TensorElement r1 = b.psi_inv(b.psi(cp)) - cp;
  if (!r1.is_zero()) return expect_zero(r1, {&b.C().base(), &b.P()}, "psi^-1 psi");
  TensorElement pcx = pure2(b.P().nf(p), b.C().reduce(c));
  TensorElement r2 = b.psi(b.psi_inv(pcx)) - pcx;
  return expect_zero(r2, pc(b), "psi psi^-1");
}

Verdict module_law(const Bundle& b, const Element& p) {
  const Algebra& P = b.P();
  for (const auto& p2 : generators(P)) {
    TensorElement rhs(2);
    for (const auto& [k, x] : b.rho(p)) rhs.add_scaled(left_mul(P, Element(k[0]), b.psi(Element(k[1]), p2)), x);
    TensorElement r = b.rho(P.mul(p, p2)) - rhs;
    if (!r.is_zero()) return expect_zero(r, pc(b), "with " + P.str(p2));
  }
  return Verdict::pass();
}

}  // namespace

std::vector<CheckSpec> entwining_checks(const Bundle& b) {
  Specs out;
  const Bundle* bp = &b;
  const Algebra& P = b.P();
  const std::string anchor = "entwining of " + P.name() + " with " + b.C().name();
  auto cs = c_samples(b);
  for (const auto& [cn, c] : cs) {
    for (std::size_t g = 0; g < P.alphabet().size(); ++g) {
      Element p = Element::letter(static_cast<Letter>(g));
      std::string pair = cn + "." + gen_name(P, g);
      out.push_back({"entwining.axioms." + pair, "the four entwining axioms on " + cn + " (x) " + gen_name(P, g), anchor,
                     [bp, c, p] { return entwining_axioms(*bp, c, p); }});
      out.push_back({"entwining.inverse." + pair, "psi^-1 psi = id and psi psi^-1 = id", anchor,
                     [bp, c, p] { return inverse_laws(*bp, c, p); }});
      out.push_back({"entwining.direct." + pair, "psi(c (x) p p') agrees with the Doi-Koppinen formula", anchor,
                     [bp, c, p] {
                       const Bundle& bb = *bp;
                       for (const auto& p2 : generators(bb.P())) {
                         Element pp = bb.P().mul(p, p2);
                         TensorElement r = bb.psi(c, pp) - bb.reduce_pc(bb.psi_direct(c, pp));
                         if (!r.is_zero()) return expect_zero(r, pc(bb), "with " + bb.P().str(p2));
                       }
                       return Verdict::pass();
                     }});
    }
  }
  for (std::size_t g = 0; g < P.alphabet().size(); ++g) {
    Element p = Element::letter(static_cast<Letter>(g));
    std::string n = gen_name(P, g);
    out.push_back({"entwining.module." + n, "rho(p p') = p_0 psi(p_1 (x) p') for every generator p'", anchor,
                   [bp, p] { return module_law(*bp, p); }});
    out.push_back({"entwining.rho_psi." + n, "psi(e (x) p) = rho(p)", anchor, [bp, p] {
                     const Bundle& bb = *bp;
                     return expect_zero(bb.psi(bb.e(), p) - bb.rho(p), pc(bb));
                   }});
    out.push_back({"entwining.lem_r." + n, "rho = (id (x) r) delta on " + n, anchor, [bp, p] {
                     const Bundle& bb = *bp;
                     TensorElement via = bb.reduce_pc(bb.delta(p).map_leg_element(1, [&](const Word& w) {
                       return bb.r(Element(w));
                     }));
                     return expect_zero(bb.rho(p) - via, pc(bb));
                   }});
  }
  out.push_back({"entwining.lem_r.coalgebra", "r is a coalgebra map and a right H-module map on generators", anchor,
                 [bp] {
                   const Bundle& bb = *bp;
                   const Coalgebra& C = bb.C();
                   const Algebra& H = bb.H();
                   for (const auto& h : generators(H)) {
                     TensorElement lhs = C.coproduct(bb.r(h));
                     TensorElement rhs = reduce_legs(
                         H.coproduct(h)
                             .map_leg_element(0, [&](const Word& w) { return bb.r(Element(w)); })
                             .map_leg_element(1, [&](const Word& w) { return bb.r(Element(w)); }),
                         {[&](const Element& x) { return C.reduce(x); }, [&](const Element& x) { return C.reduce(x); }});
                     if (!(lhs == rhs)) return expect_zero(lhs - rhs, {&C.base(), &C.base()}, H.str(h));
                     if (!(C.counit(bb.r(h)) == H.counit(h))) return Verdict::fail("counit on " + H.str(h));
                     for (const auto& h2 : generators(H)) {
                       Element r = C.reduce(bb.r(H.mul(h, h2)) - bb.act(bb.r(h), h2));
                       if (!r.is_zero()) return expect_zero(r, C.base(), H.str(h) + " " + H.str(h2));
                     }
                   }
                   return Verdict::pass();
                 }});
  out.push_back({"entwining.copointed", "rho(1) = 1 (x) e", anchor, [bp] {
                   const Bundle& bb = *bp;
                   return expect_zero(bb.rho(Element(Scalar(1))) - pure2(Element(Scalar(1)), bb.e()), pc(bb));
                 }});
  return out;
}

namespace detail {

namespace {

constexpr std::size_t kSamples = 12;

/// Bases shared by the checks of one theorem run, computed on first use so
/// that an uncertified degree turns into skipped checks.
class TheoremData {
 public:
  TheoremData(const Bundle& b, int degree) : b_(&b), degree_(degree) {}

  const Bundle& bundle() const { return *b_; }
  int degree() const { return degree_; }
  const CoinvariantBasis& A() const {
    return once(a_flag_, a_, [this] { return b_->A(degree_); });
  }
  /// A-basis used for products, can and chi samples; one degree higher
  /// when the degree-`degree` basis is too small to give enough samples.
  const CoinvariantBasis& pool() const {
    return once(p_flag_, pool_, [this] { return A().basis.size() < 4 ? b_->A(degree_ + 1) : A(); });
  }
  const CoinvariantBasis& X() const {
    return once(x_flag_, x_, [this] {
      auto x = b_->X(degree_);
      return x.basis.size() < 2 ? b_->X(degree_ + 1) : x;
    });
  }

  std::vector<std::pair<std::string, Element>> kernel;

 private:
  template <class F>
  static const CoinvariantBasis& once(std::once_flag& flag, CoinvariantBasis& slot, F f) {
    std::call_once(flag, [&] { slot = f(); });
    return slot;
  }

  const Bundle* b_;
  int degree_;
  mutable std::once_flag a_flag_, p_flag_, x_flag_;
  mutable CoinvariantBasis a_, pool_, x_;
};

/// Deterministic pairs (i, j) of indices >= 1 into a basis of size n.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n < 2) return out;
  for (std::size_t k = 0; k < kSamples; ++k) out.emplace_back(1 + k % (n - 1), 1 + (5 * k + 3) % (n - 1));
  return out;
}

/// Sample k of the Lambda samples p (x) x, p a generator and x in X.
std::optional<TensorElement> lambda_sample(const TheoremData& d, std::size_t k) {
  std::size_t ng = d.bundle().P().alphabet().size(), nx = d.X().basis.size();
  if (k >= ng * nx) return std::nullopt;
  std::size_t g = k % ng, x = (k / ng + k) % nx;
  return pure2(Element::letter(static_cast<Letter>(g)), d.X().basis[x]);
}

std::shared_ptr<TheoremData> theorem_data(Example example, int degree, int slice) {
  std::shared_ptr<TheoremData> d;
  if (example == Example::Flag) {
    const FlagExample& f = flag_example(slice);
    d = std::make_shared<TheoremData>(f.bundle, degree);
    const Algebra& u2 = f.u2;
    for (const auto& [name, k] : std::vector<std::pair<std::string, Element>>{
             {"xi", f.xi}, {"zeta-s", u2.nf(f.zeta - Element(Scalar::s()))},
             {"zeta_star-s", u2.nf(f.zeta_star - Element(Scalar::s()))}}) {
      d->kernel.emplace_back(name, k);
      for (std::size_t g = 0; g < u2.alphabet().size(); ++g) {
        d->kernel.emplace_back(name + "." + gen_name(u2, g), u2.mul(k, Element::letter(static_cast<Letter>(g))));
      }
    }
  } else {
    const TwistorExample& tw = twistor_example();
    d = std::make_shared<TheoremData>(tw.bundle, degree);
    const Algebra& su2 = tw.su2;
    for (std::string name : {"gamma", "gamma_star"}) {
      Element k = su2.parse(name);
      d->kernel.emplace_back(name, k);
      for (std::size_t g = 0; g < su2.alphabet().size(); ++g) {
        d->kernel.emplace_back(name + "." + gen_name(su2, g), su2.mul(k, Element::letter(static_cast<Letter>(g))));
      }
    }
  }
  return d;
}

std::vector<const Algebra*> pdc(const Bundle& b) { return {&b.P(), &b.D().base(), &b.C().base()}; }

Verdict cotensor_verdict(const Bundle& b, const TensorElement& t, Over over, const std::string& what) {
  auto r = b.cotensor_residue(t, over);
  if (!r.legs.is_zero()) return expect_zero(r.legs, {&b.P(), &b.C().base(), &b.D().base()}, what + ": C-leg outside X");
  if (over == Over::C) return expect_zero(r.coaction, {&b.P(), &b.C().base(), &b.C().base()}, what);
  return expect_zero(r.coaction, pdc(b), what);
}

}  // namespace

Specs theorem_specs(Example example, const SuiteOptions& o) {
  auto d = theorem_data(example, o.degree, o.slice);
  const Bundle* bp = &d->bundle();
  const Bundle& b = *bp;
  const Algebra& P = b.P();
  const std::string anchor = "principal extension " + P.name() + " over " + b.D().name();
  Specs out;

  out.push_back({"01-A.cotensor", "rho(a) lies in the truncated cotensor product over C for every A-basis element",
                 anchor, [d, bp] {
                   const auto& A = d->A().basis;
                   for (std::size_t i = 0; i < A.size(); ++i) {
                     Verdict v = cotensor_verdict(*bp, bp->rho(A[i]), Over::C, "basis element " + std::to_string(i));
                     if (v.status != Status::Pass) return v;
                   }
                   return Verdict::pass("dim A_{<=" + std::to_string(d->degree()) + "} = " + std::to_string(A.size()));
                 }});
  out.push_back({"01-A.section", "(id (x) eps) rho(a) = a for every A-basis element", anchor, [d, bp] {
                   for (const auto& a : d->A().basis) {
                     Element r = counit_leg(bp->rho(a), bp->C()) - a;
                     if (!r.is_zero()) return expect_zero(r, bp->P(), "at " + clip(bp->P().str(a)));
                   }
                   return Verdict::pass();
                 }});
  out.push_back({"01-A.injective", "rho is injective on the computed A", anchor, [d, bp] {
                   std::vector<TensorElement> images;
                   for (const auto& a : d->A().basis) images.push_back(bp->rho(a));
                   std::size_t r = rank(images);
                   std::string note = "rank " + std::to_string(r) + " of " + std::to_string(images.size());
                   if (r == images.size()) return Verdict::pass(note);
                   return Verdict::fail(note);
                 }});
  out.push_back({"01-A.cotensor_dimension",
                 "the truncated cotensor product over C is rho of the matching part of A", anchor, [d, bp] {
                   const Bundle& bb = *bp;
                   auto T = bb.cotensor_basis(d->X().basis, d->degree(), Over::C);
                   for (const auto& t : T) {
                     Element a = counit_leg(t, bb.C());
                     TensorElement r = bb.rho(a) - t;
                     if (!r.is_zero()) return expect_zero(r, {&bb.P(), &bb.C().base()}, "rho((id (x) eps) t) != t");
                     if (!d->A().contains(a)) return Verdict::fail(clip(bb.P().str(a)), "(id (x) eps) t not in A");
                   }
                   // Conversely rho(a) lies in the span whenever its C-legs lie in the X slice.
                   EchelonBasis<TensorElement> span;
                   for (const auto& t : T) span.insert(t);
                   std::size_t matching = 0;
                   for (const auto& a : d->A().basis) {
                     TensorElement r = bb.rho(a);
                     std::map<Word, Element> legs;
                     for (const auto& [k, x] : r) legs[k[0]].add(k[1], x);
                     bool in_slice =
                         std::all_of(legs.begin(), legs.end(), [&](const auto& l) { return d->X().contains(l.second); });
                     if (!in_slice) continue;
                     ++matching;
                     if (!span.contains(r)) return Verdict::fail(clip(bb.P().str(a)), "rho(a) outside the computed basis");
                   }
                   return Verdict::pass("dim cotensor slice " + std::to_string(T.size()) + ", dim A_{<=" +
                                        std::to_string(d->degree()) + "} " + std::to_string(d->A().basis.size()) +
                                        ", " + std::to_string(matching) + " basis elements with C-legs in the X slice");
                 }});

  out.push_back({"02-A.products", "products of sampled A-basis elements are coinvariant", anchor, [d, bp] {
                   const Bundle& bb = *bp;
                   const auto& pool = d->pool().basis;
                   for (const auto& a : pool) {
                     for (const auto& a2 : pool) {
                       Element x = bb.P().mul(a, a2);
                       TensorElement r = bb.rho_bar(x) - pure2(x, bb.e_bar());
                       if (!r.is_zero()) {
                         return expect_zero(r, {&bb.P(), &bb.D().base()}, clip(bb.P().str(a) + " times " + bb.P().str(a2)));
                       }
                     }
                   }
                   return Verdict::pass(std::to_string(pool.size() * pool.size()) + " products, basis degree " +
                                        std::to_string(d->pool().degree));
                 }});
  out.push_back({"03-B.in_A", "B is contained in A", anchor, [d, bp] {
                   auto B = bp->B(d->degree());
                   for (const auto& x : B.basis) {
                     if (!d->A().contains(x)) return Verdict::fail(clip(bp->P().str(x)));
                   }
                   for (const auto& x : B.basis) {
                     TensorElement r = bp->lambda(x) - pure2(bp->e(), x);
                     if (!r.is_zero()) return expect_zero(r, {&bp->C().base(), &bp->P()}, "lambda(b) != e (x) b");
                   }
                   return Verdict::pass("dim B " + std::to_string(B.basis.size()) + ", dim A " +
                                        std::to_string(d->A().basis.size()));
                 }});

  for (std::size_t k = 0; k < kSamples; ++k) {
    out.push_back({"04-can." + pad(k), "can(a (x) a') lies in the truncated cotensor product over D", anchor, [d, bp, k] {
                     auto pairs = sample_pairs(d->pool().basis.size());
                     if (k >= pairs.size()) return Verdict::skip("A-basis too small for this sample");
                     auto [i, j] = pairs[k];
                     TensorElement t = bp->can(pure2(d->pool().basis[i], d->pool().basis[j]));
                     return cotensor_verdict(*bp, t, Over::D, "sample pair");
                   }});
    out.push_back({"07-chi.colinear." + pad(k), "Lambda(can(a (x) a')) = e_bar (x) can(a (x) a')", anchor,
                   [d, bp, k] {
                     const Bundle& bb = *bp;
                     auto pairs = sample_pairs(d->pool().basis.size());
                     if (k >= pairs.size()) return Verdict::skip("A-basis too small for this sample");
                     auto [i, j] = pairs[k];
                     TensorElement t = bb.can(pure2(d->pool().basis[i], d->pool().basis[j]));
                     TensorElement r = bb.Lambda(t) - tensor(TensorElement::pure({bb.e_bar()}), t);
                     return expect_zero(r, {&bb.D().base(), &bb.P(), &bb.C().base()});
                   }});
    out.push_back({"06-Lambda.coassociative." + pad(k), "(Delta_D (x) id) Lambda = (id (x) Lambda) Lambda", anchor,
                   [d, bp, k] {
                     const Bundle& bb = *bp;
                     auto t = lambda_sample(*d, k);
                     if (!t) return Verdict::skip("not enough samples");
                     TensorElement l = bb.Lambda(*t);
                     TensorElement lhs = l.map_leg(0, [&](const Word& w) { return bb.D().coproduct(Element(w)); });
                     TensorElement rhs = bb.Lambda_tail(l);
                     const Algebra& db = bb.D().base();
                     return expect_zero(lhs - rhs, {&db, &db, &bb.P(), &bb.C().base()});
                   }});
    out.push_back({"06-Lambda.routes." + pad(k), "Lambda computed on D agrees with Lambda computed in C", anchor,
                   [d, bp, k] {
                     const Bundle& bb = *bp;
                     auto t = lambda_sample(*d, k);
                     if (!t) return Verdict::skip("not enough samples");
                     return expect_zero(bb.Lambda(*t) - bb.Lambda_in_c(*t), {&bb.D().base(), &bb.P(), &bb.C().base()});
                   }});
  }

  out.push_back({"05-A_bar.agree", "the left and right coinvariants agree on the computed basis", anchor, [d, bp] {
                   auto Ab = bp->A_bar(d->degree());
                   for (const auto& a : d->A().basis) {
                     if (!Ab.contains(a)) return Verdict::fail(clip(bp->P().str(a)), "in A, not in A_bar");
                   }
                   for (const auto& a : Ab.basis) {
                     if (!d->A().contains(a)) return Verdict::fail(clip(bp->P().str(a)), "in A_bar, not in A");
                   }
                   return Verdict::pass("dim " + std::to_string(Ab.basis.size()));
                 }});

  for (std::size_t k = 0; k < d->kernel.size(); ++k) {
    out.push_back({"08-gal.kernel." + d->kernel[k].first,
                   "(id (x) pi) psi(k (x) p) = 0 for k in ker pi and generators p", anchor, [d, bp, k] {
                     const Bundle& bb = *bp;
                     const Element& c = d->kernel[k].second;
                     if (!bb.pi(c).is_zero()) return Verdict::fail("sample not in ker pi");
                     for (const auto& p : generators(bb.P())) {
                       TensorElement r =
                           bb.psi(c, p).map_leg_element(1, [&](const Word& w) { return bb.pi(Element(w)); });
                       if (!r.is_zero()) return expect_zero(r, {&bb.P(), &bb.D().base()}, bb.P().str(p));
                     }
                     return Verdict::pass();
                   }});
  }
  out.push_back({"08-gal.theta", "theta(pi(c) (x) p) does not depend on the representative c", anchor, [d, bp] {
                   const Bundle& bb = *bp;
                   // c and c + k have the same class for k in the kernel samples.
                   auto theta = [&](const Element& c, const Element& p) {
                     return bb.psi(c, p).map_leg_element(1, [&](const Word& w) { return bb.pi(Element(w)); });
                   };
                   for (const auto& c : generators(bb.C().base())) {
                     for (std::size_t k = 0; k < d->kernel.size(); k += 3) {
                       Element c2 = bb.C().reduce(c + d->kernel[k].second);
                       for (const auto& p : generators(bb.P())) {
                         TensorElement r = theta(c, p) - theta(c2, p);
                         if (!r.is_zero()) return expect_zero(r, {&bb.P(), &bb.D().base()});
                       }
                     }
                   }
                   return Verdict::pass();
                 }});

  // Doi-Koppinen data (a)-(d).
  const auto& rels = P.presentation().relations;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out.push_back({"09-dk.a.rel." + pad(i), "delta respects " + rels[i].label, anchor, [bp, &rels, i] {
                     const Bundle& bb = *bp;
                     TensorElement r =
                         extend_multiplicative(rels[i].poly, bb.data().delta, {reducer(bb.P()), reducer(bb.H())});
                     return expect_zero(r, {&bb.P(), &bb.H()});
                   }});
  }
  for (std::size_t g = 0; g < P.alphabet().size(); ++g) {
    out.push_back({"09-dk.a.coaction." + gen_name(P, g), "delta is coassociative and counital on " + gen_name(P, g),
                   anchor, [bp, g] {
                     const Bundle& bb = *bp;
                     const Algebra& H = bb.H();
                     Element p = Element::letter(static_cast<Letter>(g));
                     TensorElement dp = bb.delta(p);
                     TensorElement lhs = dp.map_leg(1, [&](const Word& w) { return H.coproduct(Element(w)); });
                     TensorElement rhs = dp.map_leg(0, [&](const Word& w) { return bb.delta(Element(w)); });
                     if (!(lhs == rhs)) return expect_zero(lhs - rhs, {&bb.P(), &H, &H});
                     Element e = dp.contract(1, [&](const Word& w) { return H.counit(Element(w)); }).as_element();
                     return expect_zero(bb.P().nf(e - p), bb.P());
                   }});
  }
  auto cs = c_samples(b);
  for (std::size_t g = 0; g < b.H().alphabet().size(); ++g) {
    std::string hn = gen_name(b.H(), g);
    out.push_back({"09-dk.b." + hn, "Delta(c . h) = c_1 . h_1 (x) c_2 . h_2 and eps(c . h) = eps(c) eps(h)", anchor,
                   [bp, cs, g] {
                     const Bundle& bb = *bp;
                     const Coalgebra& C = bb.C();
                     const Algebra& H = bb.H();
                     Element h = Element::letter(static_cast<Letter>(g));
                     for (const auto& [cn, c] : cs) {
                       TensorElement lhs = C.coproduct(bb.act(c, h));
                       TensorElement rhs(2);
                       for (const auto& [ck, x] : C.coproduct(c)) {
                         for (const auto& [hk, y] : H.coproduct(h)) {
                           rhs.add_scaled(pure2(C.reduce(bb.act(Element(ck[0]), Element(hk[0]))),
                                                C.reduce(bb.act(Element(ck[1]), Element(hk[1])))),
                                          x * y);
                         }
                       }
                       if (!(lhs == rhs)) return expect_zero(lhs - rhs, {&C.base(), &C.base()}, cn);
                       if (!(C.counit(bb.act(c, h)) == C.counit(c) * H.counit(h))) return Verdict::fail("counit on " + cn);
                     }
                     return Verdict::pass();
                   }});
    out.push_back({"09-dk.c." + hn, "pi(c . h) = pi(c) . h for normal words c of degree <= 2", anchor, [bp, g] {
                     const Bundle& bb = *bp;
                     Element h = Element::letter(static_cast<Letter>(g));
                     for (const auto& w : words(bb.C().base(), 2)) {
                       Element c = bb.C().reduce(Element(w));
                       Element r = bb.pi(bb.act(c, h)) - bb.act_d(bb.pi(c), h);
                       if (!r.is_zero()) return expect_zero(r, bb.D().base(), bb.C().base().str(Element(w)));
                     }
                     return Verdict::pass();
                   }});
  }
  for (std::size_t g = 0; g < P.alphabet().size(); ++g) {
    out.push_back({"09-dk.d." + gen_name(P, g), "rho(p p') = rho(p) delta(p') for every generator p'", anchor,
                   [bp, g] {
                     const Bundle& bb = *bp;
                     const Algebra& Pa = bb.P();
                     Element p = Element::letter(static_cast<Letter>(g));
                     for (const auto& p2 : generators(Pa)) {
                       TensorElement rhs(2);
                       for (const auto& [k, x] : bb.rho(p)) {
                         for (const auto& [k2, y] : bb.delta(p2)) {
                           rhs.add_scaled(pure2(Pa.mul(Element(k[0]), Element(k2[0])),
                                                bb.C().reduce(bb.act(Element(k[1]), Element(k2[1])))),
                                          x * y);
                         }
                       }
                       TensorElement r = bb.rho(Pa.mul(p, p2)) - rhs;
                       if (!r.is_zero()) return expect_zero(r, pc(bb), Pa.str(p2));
                     }
                     return Verdict::pass();
                   }});
    out.push_back({"09-dk.right_pc." + gen_name(P, g), "can(p (x) p' q) = p psi applied to can(p (x) p') and q",
                   anchor, [bp, g] {
                     const Bundle& bb = *bp;
                     const Algebra& Pa = bb.P();
                     Element p = Element::letter(static_cast<Letter>(g));
                     for (const auto& p2 : generators(Pa)) {
                       for (const auto& q : generators(Pa)) {
                         TensorElement lhs = bb.can(pure2(p, Pa.mul(p2, q)));
                         TensorElement rhs(2);
                         for (const auto& [k, x] : bb.can(pure2(p, p2))) {
                           rhs.add_scaled(left_mul(Pa, Element(k[0]), bb.psi(Element(k[1]), q)), x);
                         }
                         TensorElement r = lhs - rhs;
                         if (!r.is_zero()) return expect_zero(r, pc(bb), Pa.str(p2) + ", " + Pa.str(q));
                       }
                     }
                     return Verdict::pass();
                   }});
  }
  return out;
}

}  // namespace detail

}  // namespace qbundle
