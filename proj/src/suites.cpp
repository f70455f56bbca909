#include "qbundle/suites.hpp"

#include <cstdlib>
#include <random>

#include "qbundle/error.hpp"
#include "suite_util.hpp"

namespace qbundle {

using namespace detail;

namespace {

std::string mn(int m, int n) { return "m" + std::to_string(m) + ".n" + std::to_string(n); }

Report finish(const std::string& suite, Specs specs, const SuiteOptions& o, std::map<std::string, Report::Param> params) {
  Report r = run_checks(suite, std::move(specs), o.jobs);
  r.parameters = std::move(params);
  return r;
}

// ---------------------------------------------------------------- rewrite

Element random_element(const Algebra& a, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4), len(0, degree), coef(-3, 3), qexp(-2, 2);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a.alphabet().size()) - 1);
  Element x;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(static_cast<Letter>(letter(rng)));
    int c = coef(rng);
    x.add(w, Scalar(c == 0 ? 1 : c) * Scalar::q_pow(qexp(rng)));
  }
  return x;
}

Specs rewrite_specs(const SuiteOptions& o, int degree) {
  Specs out;
  const std::vector<std::string> names = {"SUq2", "Uq2", "SUq3", "Uq4", "Sq7", "Sq4", "CP1qs"};
  constexpr int kChunks = 4;
  for (std::size_t ai = 0; ai < names.size(); ++ai) {
    const std::string name = names[ai];
    out.push_back({"completion." + name, "every overlap of the completed system resolves", name + " rewriting system",
                   [name] {
                     const Algebra& a = shared_algebra(name);
                     const RewriteSystem& rs = a.rewrite();
                     auto bad = rs.unresolved_overlaps();
                     std::string note = std::to_string(rs.rules().size()) + " rules, bound " +
                                        std::to_string(rs.degree_bound()) +
                                        (rs.fully_confluent() ? ", complete in every degree" : ", certified to the bound");
                     if (bad.empty()) return Verdict::pass(note);
                     return Verdict::fail(clip(Element(bad.front()).str(a.alphabet())),
                                          std::to_string(bad.size()) + " unresolved; " + note);
                   }});
    for (int chunk = 0; chunk < kChunks; ++chunk) {
      int lo = o.samples * chunk / kChunks, hi = o.samples * (chunk + 1) / kChunks;
      std::uint64_t seed = o.seed * 1000003u + ai * 101u + static_cast<std::uint64_t>(chunk);
      out.push_back({"church_rosser." + name + "." + std::to_string(chunk),
                     "leftmost, rightmost and random redex choice give the same normal form",
                     name + " rewriting system", [name, lo, hi, seed, degree] {
                       const Algebra& a = shared_algebra(name);
                       const RewriteSystem& rs = a.rewrite();
                       int d = std::min(degree, rs.degree_bound());
                       std::mt19937_64 rng(seed);
                       for (int i = lo; i < hi; ++i) {
                         Element x = random_element(a, d, rng);
                         Element l = rs.normal_form(x, Strategy::Leftmost);
                         Element r = rs.normal_form(x, Strategy::Rightmost);
                         Element z = rs.normal_form(x, Strategy::Random, seed + static_cast<std::uint64_t>(i));
                         if (!(l == r) || !(l == z)) {
                           return Verdict::fail(clip(a.str(x) + " -> " + a.str(l) + " | " + a.str(r) + " | " + a.str(z)));
                         }
                       }
                       return Verdict::pass(std::to_string(hi - lo) + " elements of degree <= " + std::to_string(d));
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- shared

/// Names the variant that passes; fails unless exactly one does.
Verdict one_variant(const std::vector<std::pair<std::string, std::size_t>>& failures, const std::string& what) {
  std::string note;
  std::vector<std::string> passing;
  for (const auto& [v, n] : failures) {
    if (!note.empty()) note += "; ";
    note += v + ": " + std::to_string(n) + " failing " + what;
    if (n == 0) passing.push_back(v);
  }
  if (passing.size() == 1) return Verdict::pass("passing variant " + passing.front() + " (" + note + ")");
  return Verdict::fail(std::to_string(passing.size()) + " variants pass", note);
}

Specs morphism_relation_specs(const Morphism& m, const std::string& anchor) {
  Specs out;
  const auto& rels = m.source().presentation().relations;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Morphism* mp = &m;
    out.push_back({pad(i), rels[i].label + " holds for the images", anchor, [mp, &rels, i] {
                     return expect_zero((*mp)(rels[i].poly), mp->target());
                   }});
  }
  return out;
}

Verdict coalgebra_map_on(const Morphism& m, const Element& x) {
  const Algebra& s = m.source();
  const Algebra& t = m.target();
  TensorElement lhs = t.coproduct(m(x));
  TensorElement rhs = reduce_legs(
      s.coproduct(x).map_leg_element(0, [&](const Word& w) { return m(Element(w)); })
          .map_leg_element(1, [&](const Word& w) { return m(Element(w)); }),
      {reducer(t), reducer(t)});
  if (!(t.counit(m(x)) == s.counit(x))) return Verdict::fail("counit differs on " + s.str(x));
  return expect_zero(lhs - rhs, {&t, &t});
}

// ---------------------------------------------------------------- flag

Verdict su3_star_variant(const Algebra& su3) {
  auto g = [&](int a, int b) { return su3.gen("u" + std::to_string(a) + std::to_string(b)); };
  std::vector<std::pair<std::string, std::size_t>> failures;
  for (std::string v : {"star:printed", "star:corrected"}) {
    auto img = builtin_variant("SUq3", v);
    std::size_t bad = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        Element row, col;
        for (int k = 1; k <= 3; ++k) {
          row += su3.mul(Element::letter(g(i, k)), img[g(j, k)]);
          col += su3.mul(img[g(k, i)], Element::letter(g(k, j)));
        }
        Element id(Scalar(i == j ? 1 : 0));
        if (!(su3.nf(row) == id)) ++bad;
        if (!(su3.nf(col) == id)) ++bad;
      }
    }
    failures.emplace_back(v, bad);
  }
  Verdict out = one_variant(failures, "unitarity sums");
  if (out.status == Status::Pass) {
    auto chosen = builtin_variant("SUq3", "star:corrected");
    for (std::size_t g2 = 0; g2 < chosen.size(); ++g2) {
      if (!(su3.star(Element::letter(static_cast<Letter>(g2))) == su3.nf(chosen[g2]))) {
        return Verdict::fail("builtin star differs from the passing variant on " + gen_name(su3, g2));
      }
    }
  }
  return out;
}

Specs flag_specs(const FlagExample& f, const SuiteOptions& o, int degree) {
  Specs out;
  const Algebra& su3 = f.su3;
  const Algebra& u2 = f.u2;
  const QuotientCoalgebra& Q = f.quotient;
  const Scalar s = Scalar::s();

  append(out, "01-hopf.SUq3.", bialgebra_checks(su3));
  append(out, "01-hopf.Uq2.", bialgebra_checks(u2));
  append(out, "01-star.SUq3.", star_checks(su3));
  append(out, "01-star.Uq2.", star_checks(u2));
  append(out, "01-star.CP1qs.", star_checks(f.cp1));
  out.push_back({"01-variant.SUq3.star", "exactly one reading of the SU_q(3) star is unitary", "SU_q(3) star structure",
                 [&su3] { return su3_star_variant(su3); }});
  append(out, "01-morphism.v.rel.", morphism_relation_specs(f.v, "embedding of U_q(2) into SU_q(3)"));
  for (std::size_t g = 0; g < su3.alphabet().size(); ++g) {
    out.push_back({"01-morphism.v.coalgebra." + gen_name(su3, g), "v is a coalgebra map on " + gen_name(su3, g),
                   "embedding of U_q(2) into SU_q(3)",
                   [&f, g] { return coalgebra_map_on(f.v, Element::letter(static_cast<Letter>(g))); }});
  }

  append(out, "02-podles.rel.", morphism_relation_specs(f.embed, "generic Podles sphere inside U_q(2)"));
  out.push_back({"02-podles.star", "zeta* = star(zeta) and xi is self-adjoint", "generic Podles sphere inside U_q(2)",
                 [&f, &u2] {
                   return expect_zero(u2.star(f.zeta) - f.zeta_star + (u2.star(f.xi) - f.xi), u2);
                 }});

  for (const auto& [name, x] : std::vector<std::pair<std::string, const Element*>>{
           {"xi", &f.xi}, {"zeta", &f.zeta}, {"zeta_star", &f.zeta_star}}) {
    const Element* xp = x;
    out.push_back({"03-fibre.coinvariant." + name, name + " is a coinvariant of the fibre coaction",
                   "fibre of the flag bundle", [&f, xp, &u2] {
                     const Bundle& b = f.bundle;
                     return expect_zero(b.fibre_coaction()(*xp) - TensorElement::pure({*xp, b.e_bar()}), {&u2, &u2});
                   }});
    out.push_back({"03-fibre.left_coideal." + name, "the coproduct of " + name + " lies in C (x) X",
                   "fibre of the flag bundle", [&f, xp, &u2] {
                     const Bundle& b = f.bundle;
                     TensorElement dx = u2.coproduct(*xp);
                     TensorElement lhs = dx.map_leg(1, [&](const Word& w) { return b.fibre_coaction()(Element(w)); });
                     TensorElement rhs = tensor(dx, TensorElement::pure({b.e_bar()}));
                     return expect_zero(lhs - rhs, {&u2, &u2, &u2});
                   }});
  }

  out.push_back({"04-quotient.coideal", "Delta(J) lies in J (x) C + C (x) J on the computed slice",
                 "quotient coalgebra D = U_q(2)/J", [&Q] {
                   auto bad = Q.coideal_failure();
                   std::string note = "slice " + std::to_string(Q.degree()) + ", dim J slice " +
                                      std::to_string(Q.ideal_dimension());
                   if (!bad) return Verdict::pass(note);
                   return Verdict::fail(clip(*bad), note);
                 }});

  // Identities on the quotient, tested on all normal words of degree <= 2.
  Element al = u2.parse("alpha"), als = u2.parse("alpha_star"), g = u2.parse("gamma"), gs = u2.parse("gamma_star");
  Element u = u2.parse("u"), us = u2.parse("u_star");
  auto on_words = [&u2, &Q](std::function<Element(const Element&)> f) {
    return [&u2, &Q, f] {
      for (const auto& w : words(u2, 2)) {
        Element r = Q.reduce(f(Element(w)));
        if (!r.is_zero()) return Verdict::fail("a = " + u2.str(Element(w)) + ": " + clip(u2.str(r)));
      }
      return Verdict::pass();
    };
  };
  Scalar q = Scalar::q();
  out.push_back({"05-identity.gg", "gamma a = -q gamma* u* a in D",
                 "identities in D", on_words([=, &u2](const Element& a) {
                   return u2.mul(g, a) + q * u2.mul(gs * us, a);
                 })});
  out.push_back({"05-identity.gg_star", "gamma* a = -q^-1 gamma u a in D", "identities in D",
                 on_words([=, &u2](const Element& a) { return u2.mul(gs, a) + Scalar::q_pow(-1) * u2.mul(g * u, a); })});
  out.push_back({"05-identity.ag1", "(s alpha* u* - q gamma* u*) a = s (alpha - s q gamma* u*) a in D",
                 "identities in D", on_words([=, &u2](const Element& a) {
                   return u2.mul(s * als * us - q * gs * us, a) - s * u2.mul(al - s * q * gs * us, a);
                 })});
  out.push_back({"05-identity.ag2", "(s alpha - gamma) a = s (alpha* u* - s gamma) a in D", "identities in D",
                 on_words([=, &u2](const Element& a) { return u2.mul(s * al - g, a) - s * u2.mul(als * us - s * g, a); })});
  for (int ti = 0; ti < 2; ++ti) {
    Scalar t = ti == 0 ? s : Scalar(1);
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        out.push_back({"05-identity.com." + std::string(ti == 0 ? "t_s." : "t_1.") + mn(m, n),
                       "commutation of alpha - q^n t gamma* u^m with t alpha* u^m + q^-n gamma", "identities in U_q(2)",
                       [=, &u2] {
                         Element um = u2.nf(pow(m >= 0 ? u : us, std::abs(m)));
                         Element l = u2.mul(al - Scalar::q_pow(n) * t * gs * um, t * als * um + Scalar::q_pow(-n) * g);
                         Element r = u2.mul(t * als * um + Scalar::q_pow(1 - n) * g,
                                            al - Scalar::q_pow(n + 1) * t * gs * um);
                         return expect_zero(l - r, u2);
                       }});
      }
    }
  }
  for (int v = 1; v <= 2; ++v) {
    for (int n = 0; n <= 3; ++n) {
      out.push_back({"05-identity.d_act_plus.n" + std::to_string(n) + ".v" + std::to_string(v),
                     "s d_{0,n+1} = d_{0,n} (s alpha* u* + q^-n gamma) = d_{0,n} (s alpha* u* - q^{1-n} gamma* u*)",
                     "recursion for d_{0,n}", [=, &u2, &Q] {
                       Element dn = d_element(u2, 0, n, v), dn1 = d_element(u2, 0, n + 1, v);
                       Element r1 = Q.reduce(s * dn1 - u2.mul(dn, s * als * us + Scalar::q_pow(-n) * g));
                       Element r2 = Q.reduce(s * dn1 - u2.mul(dn, s * als * us - Scalar::q_pow(1 - n) * gs * us));
                       return r1.is_zero() ? expect_zero(r2, u2, "second form") : expect_zero(r1, u2, "first form");
                     }});
      out.push_back({"05-identity.d_act_minus.n" + std::to_string(n) + ".v" + std::to_string(v),
                     "s d_{0,-n-1} = d_{0,-n} (s alpha u - q^n gamma u) = d_{0,-n} (s alpha u + q^{n+1} gamma*)",
                     "recursion for d_{0,n}", [=, &u2, &Q] {
                       Element dn = d_element(u2, 0, -n, v), dn1 = d_element(u2, 0, -n - 1, v);
                       Element r1 = Q.reduce(s * dn1 - u2.mul(dn, s * al * u - Scalar::q_pow(n) * g * u));
                       Element r2 = Q.reduce(s * dn1 - u2.mul(dn, s * al * u + Scalar::q_pow(n + 1) * gs));
                       return r1.is_zero() ? expect_zero(r2, u2, "second form") : expect_zero(r1, u2, "first form");
                     }});
    }
  }

  // Group-like elements d_{m,n}; nmax bounds n only.
  constexpr int kMaxM = 2;
  std::vector<std::pair<int, int>> range;
  for (int m = -kMaxM; m <= kMaxM; ++m) {
    for (int n = -o.nmax; n <= o.nmax; ++n) range.emplace_back(m, n);
  }
  if (o.nmax >= 1) {
    range.emplace_back(0, -o.nmax - 1);
    range.emplace_back(0, o.nmax + 1);
  }
  auto grouplike = [&u2, &Q](const Element& d) -> std::optional<std::string> {
    Element c = Q.reduce(d);
    if (c.is_zero()) return "class is zero";
    TensorElement r = Q.coproduct(c) - TensorElement::pure({c, c});
    if (!r.is_zero()) return clip(r.str({&u2.alphabet(), &u2.alphabet()}));
    if (!(Q.counit(c) == Scalar(1))) return "counit " + Q.counit(c).str();
    return std::nullopt;
  };
  for (auto [m, n] : range) {
    out.push_back({"06-d.agree." + mn(m, n), "both printed products for d_{m,n} define the same class",
                   "group-like basis of D", [=, &u2, &Q] {
                     Element a = Q.reduce(d_element(u2, m, n, 1)), b = Q.reduce(d_element(u2, m, n, 2));
                     if (a == b) return Verdict::pass();
                     bool rev = Q.reduce(d_element(u2, m, n, 1, true)) == b;
                     bool v3 = Q.reduce(d_element(u2, m, n, 3)) == b;
                     return Verdict::fail(clip(u2.str(a - b)),
                                          std::string("reversed product ") + (rev ? "agrees" : "differs") +
                                              "; factors alpha* + q^{2-k} s gamma* " + (v3 ? "agree" : "differ"));
                   }});
    for (int v = 1; v <= 3; ++v) {
      if (v == 3 && n >= 0) continue;
      out.push_back({"06-d.grouplike." + mn(m, n) + ".v" + std::to_string(v),
                     v == 3 ? "d_{m,n} with factors alpha* + q^{2-k} s gamma* is group-like in D"
                            : "printed product " + std::to_string(v) + " for d_{m,n} is group-like in D",
                     "group-like basis of D", [=, &u2] {
                       auto bad = grouplike(d_element(u2, m, n, v));
                       if (!bad) return Verdict::pass();
                       auto rev = grouplike(d_element(u2, m, n, v, true));
                       return Verdict::fail(*bad, std::string("reversed product is ") +
                                                      (rev ? "not group-like either" : "group-like"));
                     }});
    }
  }
  out.push_back({"06-d.independent", "the classes d_{m,n} are linearly independent", "group-like basis of D",
                 [range, &u2, &Q] {
                   std::vector<Element> cls;
                   for (auto [m, n] : range) cls.push_back(Q.reduce(d_element(u2, m, n, 2)));
                   std::size_t r = rank(cls);
                   std::string note = "rank " + std::to_string(r) + " of " + std::to_string(cls.size());
                   if (r == cls.size()) return Verdict::pass(note);
                   return Verdict::fail(note);
                 }});

  // Coinvariant subalgebras at the suite degree.
  out.push_back({"07-A.basis", "every computed A-basis element is D-coinvariant", "coinvariants of the flag bundle",
                 [&f, degree, &su3] {
                   const Bundle& b = f.bundle;
                   auto A = b.A(degree);
                   for (const auto& a : A.basis) {
                     TensorElement r = b.rho_bar(a) - TensorElement::pure({a, b.e_bar()});
                     if (!r.is_zero()) return expect_zero(r, {&su3, &f.u2});
                   }
                   return Verdict::pass("dim A_{<=" + std::to_string(degree) + "} = " + std::to_string(A.basis.size()));
                 }});
  out.push_back({"07-B.basis", "B is contained in A", "coinvariants of the flag bundle", [&f, degree, &su3] {
                   const Bundle& b = f.bundle;
                   auto A = b.A(degree);
                   auto B = b.B(degree);
                   for (const auto& x : B.basis) {
                     if (!A.contains(x)) return Verdict::fail(clip(su3.str(x)));
                   }
                   return Verdict::pass("dim B_{<=" + std::to_string(degree) + "} = " + std::to_string(B.basis.size()));
                 }});
  out.push_back({"07-X.generators", "xi, zeta, zeta* lie in the computed X", "fibre of the flag bundle",
                 [&f, degree] {
                   auto X = f.bundle.X(degree);
                   for (const Element* x : {&f.xi, &f.zeta, &f.zeta_star}) {
                     if (!X.contains(*x)) return Verdict::fail(clip(f.u2.str(*x)));
                   }
                   return Verdict::pass("dim X_{<=" + std::to_string(degree) + "} = " + std::to_string(X.basis.size()));
                 }});

  append(out, "08-", entwining_checks(f.bundle));
  return out;
}

// ---------------------------------------------------------------- twistor

Verdict u4_antipode_variant(const Algebra& u4) {
  std::vector<std::pair<std::string, std::size_t>> failures;
  for (std::string v : {"antipode:printed", "antipode:with_Dqinv"}) {
    std::size_t bad = 0;
    for (const auto& [label, r] : antipode_residues(u4, builtin_variant("Uq4", v))) {
      if (!r.is_zero()) ++bad;
    }
    failures.emplace_back(v, bad);
  }
  Verdict out = one_variant(failures, "antipode laws");
  if (out.status == Status::Pass) {
    auto chosen = builtin_variant("Uq4", "antipode:with_Dqinv");
    for (std::size_t g = 0; g < chosen.size(); ++g) {
      if (!(u4.antipode(Element::letter(static_cast<Letter>(g))) == u4.nf(chosen[g]))) {
        return Verdict::fail("builtin antipode differs from the passing variant on " + gen_name(u4, g));
      }
    }
  }
  return out;
}

/// The relations of U_q(4) not involving Dqinv; they form a complete system
/// in every degree.
const Algebra& uq4_matrix_part() {
  static const Lazy<Algebra> lazy([] {
    Presentation p = builtin("Uq4");
    Letter dq = p.alphabet.at("Dqinv");
    std::vector<Relation> kept;
    for (const auto& r : p.relations) {
      bool uses = false;
      for (const auto& [w, c] : r.poly) {
        for (Letter g : w) uses = uses || g == dq;
      }
      if (!uses) kept.push_back(r);
    }
    p.name = "Uq4 matrix part";
    p.relations = kept;
    p.hopf.reset();
    p.morphisms.clear();
    p.quotients.clear();
    RewriteSystem rs = RewriteSystem::complete(kept, 4);
    return std::make_unique<Algebra>(std::move(p), std::move(rs));
  });
  return lazy.get();
}

/// S(D_q Dqinv) = D_q S(D_q) and S(D_q) = Dqinv^4 K with K the antimultiplicative
/// extension of the cofactors over D_q; both determinant relations are
/// respected iff K = D_q^3, which is decided in the matrix part.
Verdict uq4_antipode_det(const Algebra& u4) {
  const Algebra& m = uq4_matrix_part();
  if (!m.rewrite().fully_confluent()) return Verdict::fail("matrix part is not complete");
  Letter dq = u4.gen("Dqinv");
  std::vector<Element> cof(u4.alphabet().size());
  for (std::size_t g = 0; g < cof.size(); ++g) {
    if (g == dq) continue;
    Element c;
    for (const auto& [w, k] : u4.antipode(Element::letter(static_cast<Letter>(g)))) {
      if (w.empty() || w[w.size() - 1] != dq) return Verdict::fail("S(" + gen_name(u4, g) + ") is not a cofactor times Dqinv");
      Word v;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == dq) return Verdict::fail("S(" + gen_name(u4, g) + ") is not a cofactor times Dqinv");
        v.push_back(w[i]);
      }
      c.add(v, k);
    }
    cof[g] = m.nf(c);
  }
  Element det = m.nf(u4.antipode(Element::letter(dq)));
  Element K = extend_multiplicative(det, cof, reducer(m), true);
  Element d3 = m.mul(m.mul(det, det), det);
  return expect_zero(K - d3, m, "K = D_q^3 with " + std::to_string(K.size()) + " terms");
}

Specs twistor_specs(const TwistorExample& tw, int degree) {
  Specs out;
  const Algebra& u4 = tw.u4;
  const Algebra& s7 = tw.s7;
  const Algebra& su2 = tw.su2;
  const Bundle& b = tw.bundle;

  append(out, "01-hopf.Uq4.", bialgebra_checks(u4));
  append(out, "01-hopf.SUq2.", bialgebra_checks(su2));
  append(out, "01-hopf.U1.", bialgebra_checks(tw.u1));
  append(out, "01-star.Uq4.", star_checks(u4));
  append(out, "01-star.SUq2.", star_checks(su2));
  append(out, "01-star.Sq7.", star_checks(s7));
  append(out, "01-star.Sq4.", star_checks(tw.s4));
  out.push_back({"01-hopf.Uq4.antipode.det_relations", "the antipode respects D_q Dqinv = 1 and Dqinv D_q = 1",
                 "U_q(4) coalgebra structure", [&u4] { return uq4_antipode_det(u4); }});
  out.push_back({"01-variant.Uq4.antipode", "exactly one reading of the U_q(4) antipode satisfies the antipode laws",
                 "U_q(4) antipode", [&u4] { return u4_antipode_variant(u4); }});

  out.push_back({"02-sq7.sphere", "z1 z1* + z2 z2* + z3 z3* + z4 z4* = 1 in S_q^7", "S_q^7 relations", [&s7] {
                   Element r = s7.parse("z1*z1_star + z2*z2_star + z3*z3_star + z4*z4_star - 1");
                   return expect_zero(s7.nf(r), s7);
                 }});
  append(out, "02-sq7.embed.", morphism_relation_specs(tw.embed, "S_q^7 as the last row of U_q(4)"));

  out.push_back({"03-action.kills_M", "1 . m g = 0 for the generators m of M and g = 1 or a generator of U_q(4)",
                 "action of U_q(4) on SU_q(2)", [&tw, &b, &u4] {
                   std::vector<Element> hs = {Element(Scalar(1))};
                   for (const auto& g : generators(u4)) hs.push_back(g);
                   for (const auto& m : tw.m_ideal) {
                     for (const auto& h : hs) {
                       Element r = b.r(u4.mul(m, h));
                       if (!r.is_zero()) return Verdict::fail(clip(u4.str(m) + " times " + u4.str(h) + ": " + tw.su2.str(r)));
                     }
                   }
                   return Verdict::pass();
                 }});
  const auto& u4rels = u4.presentation().relations;
  for (std::size_t i = 0; i < u4rels.size(); ++i) {
    out.push_back({"03-action.rel." + pad(i), "the action respects " + u4rels[i].label, "action of U_q(4) on SU_q(2)",
                   [&b, &su2, &u4rels, i] {
                     for (const auto& w : words(su2, 1)) {
                       Element r = b.act(Element(w), u4rels[i].poly);
                       if (!r.is_zero()) return Verdict::fail(clip(su2.str(Element(w)) + ": " + su2.str(r)));
                     }
                     return Verdict::pass();
                   }});
  }
  out.push_back({"03-action.identification", "1 . t_ij gives the SU_q(2) matrix on the upper block",
                 "action of U_q(4) on SU_q(2)", [&tw, &b, &su2, &u4] {
                   for (const auto& [g, x] : u4.presentation().quotients.at("pi_SUq2").identification) {
                     Element r = b.r(u4.parse(g)) - su2.parse(x);
                     if (!r.is_zero()) return Verdict::fail(g + ": " + clip(su2.str(r)));
                   }
                   (void)tw;
                   return Verdict::pass();
                 }});

  append(out, "04-sq4.embed.", morphism_relation_specs(tw.s4_embed, "S_q^4 inside S_q^7"));
  out.push_back({"04-sq4.printed_R_a", "R a = q^-1 a R as printed", "S_q^4 inside S_q^7", [&tw, &s7] {
                   Element a = tw.s4_embed(tw.s4.parse("a")), R = tw.s4_embed(tw.s4.parse("R"));
                   Element printed = s7.mul(R, a) - Scalar::q_pow(-1) * s7.mul(a, R);
                   Element held = s7.mul(R, a) - Scalar::q_pow(-2) * s7.mul(a, R);
                   return expect_zero(printed, s7, held.is_zero() ? "R a = q^-2 a R holds" : "");
                 }});

  for (std::size_t g = 0; g < tw.s4.alphabet().size(); ++g) {
    out.push_back({"05-coinvariant." + gen_name(tw.s4, g), gen_name(tw.s4, g) + " is SU_q(2)-coinvariant",
                   "coinvariants of the twistor bundle", [&tw, &b, &s7, &su2, g] {
                     Element x = tw.s4_embed.images()[g];
                     return expect_zero(b.rho(x) - TensorElement::pure({x, b.e()}), {&s7, &su2});
                   }});
  }
  out.push_back({"05-B.basis", "the Sq4 generators lie in the computed B", "coinvariants of the twistor bundle",
                 [&tw, &b, &s7] {
                   auto B = b.B(2);
                   for (const auto& x : tw.s4_embed.images()) {
                     if (!B.contains(x)) return Verdict::fail(clip(s7.str(x)));
                   }
                   return Verdict::pass("dim B_{<=2} = " + std::to_string(B.basis.size()));
                 }});

  out.push_back({"06-mu.monomials", "pi_U1 after pi_SUq2 equals mu on monomials of degree <= 2",
                 "U(1) inside U_q(4)", [&tw, &u4] {
                   auto ws = words(u4, 2);
                   for (const auto& w : ws) {
                     Element r = tw.pi_u1(tw.pi_su2(Element(w))) - tw.mu(Element(w));
                     if (!r.is_zero()) return Verdict::fail(u4.str(Element(w)) + ": " + clip(tw.u1.str(r)));
                   }
                   return Verdict::pass(std::to_string(ws.size()) + " monomials");
                 }});

  for (std::size_t g = 0; g < s7.alphabet().size(); ++g) {
    out.push_back({"07-rho_bar.multiplicative." + gen_name(s7, g), "rho_bar(p p') = rho_bar(p) rho_bar(p')",
                   "U(1)-coaction on S_q^7", [&b, &s7, &tw, g] {
                     Element p = Element::letter(static_cast<Letter>(g));
                     for (const auto& p2 : generators(s7)) {
                       TensorElement lhs = b.rho_bar(s7.mul(p, p2));
                       TensorElement rhs = reduce_legs(b.rho_bar(p) * b.rho_bar(p2), {reducer(s7), reducer(tw.u1)});
                       if (!(lhs == rhs)) return expect_zero(lhs - rhs, {&s7, &tw.u1});
                     }
                     return Verdict::pass();
                   }});
  }

  const Algebra& cpq1 = shared_algebra("CPq1");
  static const Lazy<Morphism> cp_embed([] {
    return std::make_unique<Morphism>(Morphism::named(shared_algebra("CPq1"), shared_algebra("SUq2"), "embed"));
  });
  append(out, "08-X.podles.", morphism_relation_specs(cp_embed.get(), "standard Podles sphere inside SU_q(2)"));
  out.push_back({"08-X.equals_podles", "X_{<=2} is spanned by 1 and the Podles generators", "fibre of the twistor bundle",
                 [&b, &su2, &cpq1] {
                   auto X = b.X(2);
                   std::vector<Element> gens = {Element(Scalar(1))};
                   for (const auto& x : cp_embed.get().images()) gens.push_back(x);
                   for (const auto& x : gens) {
                     if (!X.contains(x)) return Verdict::fail(clip(su2.str(x)));
                   }
                   std::size_t r = rank(gens);
                   std::string note = "dim X_{<=2} = " + std::to_string(X.basis.size());
                   if (r != X.basis.size()) return Verdict::fail("rank of Podles generators " + std::to_string(r), note);
                   (void)cpq1;
                   return Verdict::pass(note);
                 }});

  // U(1)-weights of z_1..z_4 under mu: u, u*, u*, u.
  auto weight = [](int i) { return i == 1 || i == 4 ? 1 : -1; };
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      std::string name = "z" + std::to_string(i) + "_z" + std::to_string(j) + "_star";
      int w = weight(i) - weight(j);
      out.push_back({"09-A." + name, name + " has U(1)-weight " + std::to_string(w), "coinvariants of the twistor bundle",
                     [&b, &s7, &tw, i, j, w] {
                       Element x = s7.parse("z" + std::to_string(i) + "*z" + std::to_string(j) + "_star");
                       Element uw = tw.u1.nf(pow(tw.u1.parse(w >= 0 ? "u" : "u_star"), std::abs(w)));
                       return expect_zero(b.rho_bar(x) - TensorElement::pure({x, uw}), {&s7, &tw.u1},
                                          w == 0 ? "coinvariant" : "not coinvariant");
                     }});
    }
  }
  out.push_back({"09-A.basis", "the computed A is spanned by 1 and the weight-zero quadratics in z, z*",
                 "coinvariants of the twistor bundle", [&b, &s7, degree, weight] {
                   auto A = b.A(degree);
                   std::string note = "dim A_{<=" + std::to_string(degree) + "} = " + std::to_string(A.basis.size());
                   if (degree != 2) return Verdict::pass(note);
                   std::vector<Element> gens = {Element(Scalar(1))};
                   auto z = [](int i) { return "z" + std::to_string(i); };
                   for (int i = 1; i <= 4; ++i) {
                     for (int j = 1; j <= 4; ++j) {
                       if (weight(i) == weight(j)) gens.push_back(s7.parse(z(i) + "*" + z(j) + "_star"));
                       if (weight(i) == 1 && weight(j) == -1) {
                         gens.push_back(s7.parse(z(i) + "*" + z(j)));
                         gens.push_back(s7.parse(z(j) + "_star*" + z(i) + "_star"));
                       }
                     }
                   }
                   std::size_t r = rank(gens);
                   if (r != A.basis.size()) return Verdict::fail("rank of the quadratics " + std::to_string(r), note);
                   for (const auto& x : gens) {
                     if (!A.contains(x)) return Verdict::fail(clip(s7.str(x)), note);
                   }
                   return Verdict::pass(note);
                 }});

  append(out, "10-", entwining_checks(b));
  return out;
}

}  // namespace

std::vector<CheckSpec> morphism_checks(const Morphism& m, const std::string& prefix, const std::string& anchor) {
  Specs out;
  append(out, prefix, morphism_relation_specs(m, anchor));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rewrite", "flag", "twistor", "theorem-flag", "theorem-twistor"};
  return names;
}

int default_degree(const std::string& suite) {
  if (const char* env = std::getenv("QBUNDLE_DEGREE")) {
    char* end = nullptr;
    long d = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && d > 0 && d < 32) return static_cast<int>(d);
    throw Error(ErrorKind::Usage, std::string("QBUNDLE_DEGREE must be a positive integer, got '") + env + "'");
  }
  if (suite == "flag") return 3;
  if (suite == "twistor") return 2;
  if (suite == "rewrite") return 4;
  return 2;
}

namespace {
int resolve_degree(const std::string& suite, const SuiteOptions& o) {
  return o.degree > 0 ? o.degree : default_degree(suite);
}
}  // namespace

Report run_rewrite_suite(const SuiteOptions& o) {
  int degree = resolve_degree("rewrite", o);
  return finish("rewrite", rewrite_specs(o, degree), o,
                {{"degree", long{degree}}, {"samples", long{o.samples}}, {"seed", static_cast<long>(o.seed)}});
}

Report run_flag_suite(const SuiteOptions& o) {
  int degree = resolve_degree("flag", o);
  if (degree < 3) throw Error(ErrorKind::Usage, "the flag suite needs degree >= 3");
  if (o.nmax < 0) throw Error(ErrorKind::Usage, "nmax must be >= 0");
  const FlagExample& f = flag_example(o.slice);
  return finish("flag", flag_specs(f, o, degree), o,
                {{"degree", long{degree}}, {"nmax", long{o.nmax}}, {"slice", long{o.slice}}});
}

Report run_twistor_suite(const SuiteOptions& o) {
  int degree = resolve_degree("twistor", o);
  if (degree < 2) throw Error(ErrorKind::Usage, "the twistor suite needs degree >= 2");
  const TwistorExample& tw = twistor_example();
  return finish("twistor", twistor_specs(tw, degree), o, {{"degree", long{degree}}});
}

Report run_theorem_checks(Example example, const SuiteOptions& o) {
  std::string name = example == Example::Flag ? "theorem-flag" : "theorem-twistor";
  int degree = resolve_degree(name, o);
  SuiteOptions opt = o;
  opt.degree = degree;
  std::map<std::string, Report::Param> params = {{"degree", long{degree}}};
  if (example == Example::Flag) params["slice"] = long{o.slice};
  return finish(name, theorem_specs(example, opt), o, std::move(params));
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "rewrite") return run_rewrite_suite(o);
  if (name == "flag") return run_flag_suite(o);
  if (name == "twistor") return run_twistor_suite(o);
  if (name == "theorem-flag") return run_theorem_checks(Example::Flag, o);
  if (name == "theorem-twistor") return run_theorem_checks(Example::Twistor, o);
  throw Error(ErrorKind::Usage, "unknown suite '" + name + "'");
}

}  // namespace qbundle
