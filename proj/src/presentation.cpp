#include "qbundle/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qbundle/error.hpp"
#include "qbundle/expr.hpp"

namespace qbundle {

using nlohmann::ordered_json;

Element Presentation::parse(std::string_view text) const { return parse_element(text, alphabet); }

TensorElement Presentation::parse2(std::string_view text) const { return parse_tensor(text, {&alphabet, &alphabet}); }

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int word_weight(const Word& w, const std::vector<int>& grading) {
  int total = 0;
  for (Letter g : w) total += grading[g];
  return total;
}

}  // namespace

void Presentation::validate() const {
  std::size_t n = alphabet.size();
  for (const auto& g : alphabet.names()) {
    if (!valid_identifier(g)) throw Error(ErrorKind::ValidationError, "invalid generator name '" + g + "'");
    if (g == "q" || g == "s") throw Error(ErrorKind::ValidationError, "generator name '" + g + "' is reserved");
  }
  for (const auto& r : relations) {
    if (r.poly.is_zero()) throw Error(ErrorKind::ValidationError, "relation '" + r.label + "' is trivially zero");
    if (r.declared_lead && static_cast<int>(r.declared_lead->size()) < r.poly.degree()) {
      throw Error(ErrorKind::DegreeIncompatibleRelation,
                  "relation '" + r.label + "': leading word has degree " + std::to_string(r.declared_lead->size()) +
                      " but the relation has degree " + std::to_string(r.poly.degree()));
    }
    if (!grading.empty()) {
      int w0 = word_weight(r.poly.begin()->first, grading);
      for (const auto& [w, c] : r.poly) {
        if (word_weight(w, grading) != w0) {
          throw Error(ErrorKind::ValidationError, "relation '" + r.label + "' is not homogeneous for the grading");
        }
      }
    }
  }
  if (!grading.empty() && grading.size() != n) throw Error(ErrorKind::ValidationError, "grading size mismatch");
  if (star.kind == StarData::Kind::Letter) {
    if (star.partner.size() != n) throw Error(ErrorKind::ValidationError, "star partner list size mismatch");
    for (std::size_t g = 0; g < n; ++g) {
      if (star.partner[g] >= n || star.partner[star.partner[g]] != g) {
        throw Error(ErrorKind::ValidationError, "star is not an involution at '" + alphabet.name(g) + "'");
      }
    }
  } else if (star.kind == StarData::Kind::Expression && star.images.size() != n) {
    throw Error(ErrorKind::ValidationError, "star image list size mismatch");
  }
  if (hopf) {
    if (hopf->delta.size() != n || hopf->epsilon.size() != n) {
      throw Error(ErrorKind::ValidationError, "coalgebra data must give delta and epsilon for every generator");
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (hopf->delta[g].arity() != 2) throw Error(ErrorKind::ValidationError, "delta image is not a 2-tensor");
    }
    if (!hopf->antipode.empty() && hopf->antipode.size() != n) {
      throw Error(ErrorKind::ValidationError, "antipode must be given for every generator");
    }
    if (!hopf->antipode_inverse.empty() && hopf->antipode_inverse.size() != n) {
      throw Error(ErrorKind::ValidationError, "inverse antipode must be given for every generator");
    }
  }
  for (const auto& [name, m] : morphisms) {
    if (m.images.size() != n) throw Error(ErrorKind::ValidationError, "morphism '" + name + "' misses images");
  }
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (a.name != b.name || !(a.alphabet == b.alphabet) || a.degree_bound != b.degree_bound) return false;
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    if (!(a.relations[i].poly == b.relations[i].poly) || a.relations[i].declared_lead != b.relations[i].declared_lead) {
      return false;
    }
  }
  return a.star == b.star && a.hopf == b.hopf && a.morphisms == b.morphisms && a.quotients == b.quotients &&
         a.grading == b.grading;
}

// ---------------------------------------------------------------------------
// builtin presentations

namespace {

std::string t(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }
std::string u(int i, int j) { return "u" + std::to_string(i) + std::to_string(j); }

// "(-q)^k" as a scalar factor text.
std::string mq(int k) {
  if (k == 0) return "1";
  return "(-q)^" + std::string(k < 0 ? "-" : "") + std::to_string(std::abs(k));
}

int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  }
  return n;
}

// Sum over permutations sigma of {0..k-1} of (-q)^I(sigma) prod_r entry(sigma(r), r).
std::string q_antisymmetrized(int k, const std::function<std::string(int, int)>& entry) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::string out;
  do {
    if (!out.empty()) out += " + ";
    out += mq(inversions(p));
    for (int r = 0; r < k; ++r) out += "*" + entry(p[r], r);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Quantum matrix (FRT) relations for an n x n matrix of generators.
std::vector<std::string> quantum_matrix_relations(int n, const std::function<std::string(int, int)>& x) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(x(i, j) + "*" + x(i, k) + " = q*" + x(i, k) + "*" + x(i, j));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) out.push_back(x(j, i) + "*" + x(k, i) + " = q*" + x(k, i) + "*" + x(j, i));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        for (int m = 1; m <= n; ++m) {
          if (j > m) out.push_back(x(i, j) + "*" + x(k, m) + " = " + x(k, m) + "*" + x(i, j));
          if (j < m) {
            out.push_back(x(i, j) + "*" + x(k, m) + " = " + x(k, m) + "*" + x(i, j) + " + (q - q^-1)*" + x(i, m) +
                          "*" + x(k, j));
          }
        }
      }
    }
  }
  return out;
}

Presentation make(const std::string& name, std::vector<std::string> gens, const std::vector<std::string>& rels,
                  int bound) {
  Presentation p;
  p.name = name;
  p.alphabet = Alphabet(std::move(gens));
  for (const auto& r : rels) p.relations.push_back(parse_relation(r, p.alphabet));
  p.degree_bound = bound;
  return p;
}

void letter_star(Presentation& p, const std::vector<std::pair<std::string, std::string>>& pairs) {
  p.star.kind = StarData::Kind::Letter;
  p.star.partner.resize(p.alphabet.size());
  for (std::size_t g = 0; g < p.alphabet.size(); ++g) p.star.partner[g] = static_cast<Letter>(g);
  for (const auto& [a, b] : pairs) {
    p.star.partner[p.alphabet.at(a)] = p.alphabet.at(b);
    p.star.partner[p.alphabet.at(b)] = p.alphabet.at(a);
  }
}

void set_hopf(Presentation& p, const std::map<std::string, std::string>& delta,
              const std::map<std::string, std::string>& eps, const std::map<std::string, std::string>& s,
              const std::map<std::string, std::string>& sinv) {
  HopfData h;
  for (const auto& g : p.alphabet.names()) {
    h.delta.push_back(p.parse2(delta.at(g)));
    h.epsilon.push_back(Scalar::parse(eps.at(g)));
    if (!s.empty()) h.antipode.push_back(p.parse(s.at(g)));
    if (!sinv.empty()) h.antipode_inverse.push_back(p.parse(sinv.at(g)));
  }
  p.hopf = std::move(h);
}

void set_grading(Presentation& p, const std::map<std::string, int>& w) {
  p.grading.assign(p.alphabet.size(), 0);
  for (const auto& [g, k] : w) p.grading[p.alphabet.at(g)] = k;
}

MorphismData morphism(const std::string& target, const Presentation& src, const std::map<std::string, std::string>& img) {
  MorphismData m;
  m.target = target;
  for (const auto& g : src.alphabet.names()) {
    auto it = img.find(g);
    m.images.push_back(it == img.end() ? "0" : it->second);
  }
  return m;
}

const std::vector<std::string> kSu2Relations = {
    "alpha*gamma = q*gamma*alpha",
    "gamma*gamma_star = gamma_star*gamma",
    "alpha*gamma_star = q*gamma_star*alpha",
    "alpha_star*alpha + gamma*gamma_star = 1",
    "alpha*alpha_star + q^2*gamma*gamma_star = 1",
    // star images of the two q-commutation relations
    "gamma_star*alpha_star = q*alpha_star*gamma_star",
    "gamma*alpha_star = q*alpha_star*gamma",
};

Presentation build_su2() {
  Presentation p = make("SUq2", {"gamma", "gamma_star", "alpha", "alpha_star"}, kSu2Relations, 4);
  letter_star(p, {{"gamma", "gamma_star"}, {"alpha", "alpha_star"}});
  set_hopf(p,
           {{"alpha", "alpha (x) alpha - q*gamma_star (x) gamma"},
            {"alpha_star", "alpha_star (x) alpha_star - q*gamma (x) gamma_star"},
            {"gamma", "gamma (x) alpha + alpha_star (x) gamma"},
            {"gamma_star", "gamma_star (x) alpha_star + alpha (x) gamma_star"}},
           {{"alpha", "1"}, {"alpha_star", "1"}, {"gamma", "0"}, {"gamma_star", "0"}},
           {{"alpha", "alpha_star"}, {"alpha_star", "alpha"}, {"gamma", "-q*gamma"}, {"gamma_star", "-q^-1*gamma_star"}},
           {{"alpha", "alpha_star"}, {"alpha_star", "alpha"}, {"gamma", "-q^-1*gamma"}, {"gamma_star", "-q*gamma_star"}});
  set_grading(p, {{"alpha", 1}, {"gamma", 1}, {"alpha_star", -1}, {"gamma_star", -1}});
  p.morphisms["pi_U1"] = morphism("U1", p, {{"alpha", "u"}, {"alpha_star", "u_star"}});
  return p;
}

Presentation build_u2() {
  std::vector<std::string> rels = kSu2Relations;
  for (const char* g : {"gamma", "gamma_star", "alpha", "alpha_star"}) {
    rels.push_back(std::string("u*") + g + " = " + g + "*u");
    rels.push_back(std::string("u_star*") + g + " = " + g + "*u_star");
  }
  rels.push_back("u*u_star = 1");
  rels.push_back("u_star*u = 1");
  Presentation p = make("Uq2", {"gamma", "gamma_star", "alpha", "alpha_star", "u", "u_star"}, rels, 4);
  letter_star(p, {{"gamma", "gamma_star"}, {"alpha", "alpha_star"}, {"u", "u_star"}});
  set_hopf(p,
           {{"u", "u (x) u"},
            {"u_star", "u_star (x) u_star"},
            {"alpha", "alpha (x) alpha - q*gamma_star*u_star (x) gamma"},
            {"alpha_star", "alpha_star (x) alpha_star - q*gamma*u (x) gamma_star"},
            {"gamma", "gamma (x) alpha + alpha_star*u_star (x) gamma"},
            {"gamma_star", "gamma_star (x) alpha_star + alpha*u (x) gamma_star"}},
           {{"u", "1"}, {"u_star", "1"}, {"alpha", "1"}, {"alpha_star", "1"}, {"gamma", "0"}, {"gamma_star", "0"}},
           {{"u", "u_star"},
            {"u_star", "u"},
            {"alpha", "alpha_star"},
            {"alpha_star", "alpha"},
            {"gamma", "-q*u*gamma"},
            {"gamma_star", "-q^-1*u_star*gamma_star"}},
           {{"u", "u_star"},
            {"u_star", "u"},
            {"alpha", "alpha_star"},
            {"alpha_star", "alpha"},
            {"gamma", "-q^-1*u*gamma"},
            {"gamma_star", "-q*u_star*gamma_star"}});
  set_grading(p, {{"alpha", 1}, {"gamma", 1}, {"alpha_star", -1}, {"gamma_star", -1}, {"u", -2}, {"u_star", 2}});
  return p;
}

Presentation build_u1() {
  Presentation p = make("U1", {"u", "u_star"}, {"u*u_star = 1", "u_star*u = 1"}, 4);
  letter_star(p, {{"u", "u_star"}});
  set_hopf(p, {{"u", "u (x) u"}, {"u_star", "u_star (x) u_star"}}, {{"u", "1"}, {"u_star", "1"}},
           {{"u", "u_star"}, {"u_star", "u"}}, {{"u", "u_star"}, {"u_star", "u"}});
  set_grading(p, {{"u", 1}, {"u_star", -1}});
  return p;
}

// u_ij^* for SU_q(3); `corrected` selects u_{i2 j1} in the second product.
std::string su3_star_text(int i, int j, bool corrected) {
  std::vector<int> is, js;
  for (int k = 1; k <= 3; ++k) {
    if (k != i) is.push_back(k);
    if (k != j) js.push_back(k);
  }
  std::string second = corrected ? u(is[0], js[1]) + "*" + u(is[1], js[0]) : u(is[0], js[1]) + "*" + u(is[0], js[0]);
  return mq(j - i) + "*(" + u(is[0], js[0]) + "*" + u(is[1], js[1]) + " - q*" + second + ")";
}

std::vector<std::string> su3_names() {
  std::vector<std::string> g;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) g.push_back(u(i, j));
  }
  return g;
}

Presentation build_su3() {
  std::vector<std::string> rels = quantum_matrix_relations(3, u);
  for (int j1 = 1; j1 <= 3; ++j1) {
    for (int j2 = 1; j2 <= 3; ++j2) {
      for (int j3 = 1; j3 <= 3; ++j3) {
        std::vector<int> rows{j1, j2, j3};
        std::string lhs = q_antisymmetrized(3, [&](int col, int r) { return u(rows[r], col + 1); });
        bool distinct = j1 != j2 && j1 != j3 && j2 != j3;
        std::string rhs = distinct ? mq(inversions({j1, j2, j3})) : "0";
        rels.push_back(lhs + " = " + rhs);
      }
    }
  }
  Presentation p = make("SUq3", su3_names(), rels, 6);
  p.star.kind = StarData::Kind::Expression;
  std::map<std::string, std::string> delta, eps, s, sinv;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      p.star.images.push_back(p.parse(su3_star_text(i, j, true)));
      std::string d;
      for (int k = 1; k <= 3; ++k) d += (k > 1 ? " + " : "") + u(i, k) + " (x) " + u(k, j);
      delta[u(i, j)] = d;
      eps[u(i, j)] = i == j ? "1" : "0";
      s[u(i, j)] = su3_star_text(j, i, true);
      sinv[u(i, j)] = "q^" + std::to_string(2 * (j - i)) + "*(" + su3_star_text(j, i, true) + ")";
    }
  }
  set_hopf(p, delta, eps, s, sinv);
  p.morphisms["v"] = morphism("Uq2", p,
                              {{"u11", "u"},
                               {"u22", "alpha"},
                               {"u23", "-q*gamma_star*u_star"},
                               {"u32", "gamma"},
                               {"u33", "alpha_star*u_star"}});
  return p;
}

std::string uq4_det_text() {
  return q_antisymmetrized(4, [](int row, int col) { return t(row + 1, col + 1); });
}

// Printed antipode of O(U_q(4)): (-q)^{i-j} times the q-minor with row j and
// column i removed. `dqinv` appends the D_q^{-1} factor.
std::string uq4_antipode_text(int i, int j, bool dqinv) {
  std::vector<int> is, js;
  for (int k = 1; k <= 4; ++k) {
    if (k != i) is.push_back(k);
    if (k != j) js.push_back(k);
  }
  std::string minor = q_antisymmetrized(3, [&](int r, int c) { return t(js[r], is[c]); });
  return mq(i - j) + "*(" + minor + ")" + (dqinv ? "*Dqinv" : "");
}

std::vector<std::string> uq4_names() {
  std::vector<std::string> g;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) g.push_back(t(i, j));
  }
  g.push_back("Dqinv");
  return g;
}

Presentation build_u4() {
  std::vector<std::string> rels = quantum_matrix_relations(4, t);
  std::string det = uq4_det_text();
  rels.push_back("(" + det + ")*Dqinv = 1");
  rels.push_back("Dqinv*(" + det + ") = 1");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) rels.push_back("Dqinv*" + t(i, j) + " = " + t(i, j) + "*Dqinv");
  }
  Presentation p = make("Uq4", uq4_names(), rels, 8);
  std::map<std::string, std::string> delta, eps, s, sinv;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      std::string d;
      for (int k = 1; k <= 4; ++k) d += (k > 1 ? " + " : "") + t(i, k) + " (x) " + t(k, j);
      delta[t(i, j)] = d;
      eps[t(i, j)] = i == j ? "1" : "0";
      s[t(i, j)] = uq4_antipode_text(i, j, true);
      sinv[t(i, j)] = "q^" + std::to_string(2 * (j - i)) + "*" + uq4_antipode_text(i, j, true);
    }
  }
  delta["Dqinv"] = "Dqinv (x) Dqinv";
  eps["Dqinv"] = "1";
  s["Dqinv"] = det;
  sinv["Dqinv"] = det;
  set_hopf(p, delta, eps, s, sinv);
  // t_ij^* = S(t_ji), D_q^* = D_q^{-1}.
  p.star.kind = StarData::Kind::Expression;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) p.star.images.push_back(p.hopf->antipode[p.alphabet.at(t(j, i))]);
  }
  p.star.images.push_back(p.parse(det));
  set_grading(p, {{"t11", 1}, {"t12", -1}, {"t13", 0}, {"t14", 2}, {"t21", 1}, {"t22", -1}, {"t23", 0}, {"t24", 2},
                  {"t31", 0}, {"t32", -2}, {"t33", -1}, {"t34", 1}, {"t41", 0}, {"t42", -2}, {"t43", -1}, {"t44", 1}});
  p.morphisms["mu"] = morphism("U1", p, {{"t11", "u"}, {"t44", "u"}, {"t22", "u_star"}, {"t33", "u_star"}, {"Dqinv", "1"}});
  QuotientData m;
  m.target = "SUq2";
  m.ideal_generators = {"t13", "t31", "t14", "t41", "t24", "t42", "t23", "t32", "t11 - t44", "t22 - t33",
                        "t12 + t43", "t21 + t34", "t11*t22 - q*t12*t21 - 1"};
  m.identification = {{"t11", "alpha"}, {"t12", "-q*gamma_star"}, {"t21", "gamma"}, {"t22", "alpha_star"}};
  p.quotients["pi_SUq2"] = m;
  return p;
}

Presentation build_s7() {
  std::vector<std::string> rels;
  auto z = [](int i) { return "z" + std::to_string(i); };
  auto zs = [](int i) { return "z" + std::to_string(i) + "_star"; };
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) rels.push_back(z(i) + "*" + z(j) + " = q*" + z(j) + "*" + z(i));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i != j) rels.push_back(zs(j) + "*" + z(i) + " = q*" + z(i) + "*" + zs(j));
    }
  }
  for (int k = 1; k <= 4; ++k) {
    std::string r = zs(k) + "*" + z(k) + " = " + z(k) + "*" + zs(k);
    if (k > 1) {
      r += " + (1 - q^2)*(";
      for (int j = 1; j < k; ++j) r += (j > 1 ? " + " : "") + z(j) + "*" + zs(j);
      r += ")";
    }
    rels.push_back(r);
  }
  rels.push_back("z1*z1_star + z2*z2_star + z3*z3_star + z4*z4_star = 1");
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) rels.push_back(zs(j) + "*" + zs(i) + " = q*" + zs(i) + "*" + zs(j));
  }
  Presentation p = make("Sq7", {"z1", "z2", "z3", "z4", "z1_star", "z2_star", "z3_star", "z4_star"}, rels, 4);
  letter_star(p, {{"z1", "z1_star"}, {"z2", "z2_star"}, {"z3", "z3_star"}, {"z4", "z4_star"}});
  set_grading(p, {{"z1", 1}, {"z2", 1}, {"z3", 1}, {"z4", 1},
                  {"z1_star", -1}, {"z2_star", -1}, {"z3_star", -1}, {"z4_star", -1}});
  // z_i -> t_{4i}, z_i^* -> t_{4i}^* = S(t_{i4}).
  Presentation u4 = build_u4();
  std::map<std::string, std::string> img;
  for (int i = 1; i <= 4; ++i) {
    img[z(i)] = t(4, i);
    img[zs(i)] = u4.star.images[u4.alphabet.at(t(4, i))].str(u4.alphabet);
  }
  p.morphisms["embed"] = morphism("Uq4", p, img);
  return p;
}

Presentation build_s4() {
  Presentation p = make("Sq4", {"R", "b", "b_star", "a", "a_star"},
                        {"R*a = q^-2*a*R", "R*b = q^2*b*R", "a*b = q^3*b*a", "a*b_star = q^-1*b_star*a",
                         "a*a_star - q^2*a_star*a = (1 - q^2)*R^2", "b_star*b - q^4*b*b_star = (1 - q^2)*R",
                         "a*a_star + q^2*b*b_star = R*(1 - q^2*R)",
                         // star images
                         "a_star*R = q^-2*R*a_star", "b_star*R = q^2*R*b_star", "b_star*a_star = q^3*a_star*b_star",
                         "b*a_star = q^-1*a_star*b"},
                        4);
  letter_star(p, {{"b", "b_star"}, {"a", "a_star"}});
  set_grading(p, {{"b", 2}, {"b_star", -2}});
  p.morphisms["embed"] = morphism("Sq7", p,
                                  {{"a", "z1*z4_star - z2*z3_star"},
                                   {"a_star", "z4*z1_star - z3*z2_star"},
                                   {"b", "z1*z3 + q^-1*z2*z4"},
                                   {"b_star", "z3_star*z1_star + q^-1*z4_star*z2_star"},
                                   {"R", "z1*z1_star + z2*z2_star"}});
  return p;
}

Presentation build_podles(bool generic) {
  std::vector<std::string> rels = {"zeta*xi = q^2*xi*zeta", "xi*zeta_star = q^2*zeta_star*xi"};
  if (generic) {
    rels.push_back("zeta*zeta_star = (s^2 + q^2*xi)*(1 - q^2*xi)");
    rels.push_back("zeta_star*zeta = (s^2 + xi)*(1 - xi)");
  } else {
    rels.push_back("zeta*zeta_star = q^2*xi*(1 - q^2*xi)");
    rels.push_back("zeta_star*zeta = xi*(1 - xi)");
  }
  Presentation p = make(generic ? "CP1qs" : "CPq1", {"xi", "zeta", "zeta_star"}, rels, 4);
  letter_star(p, {{"zeta", "zeta_star"}});
  if (generic) {
    p.morphisms["embed"] =
        morphism("Uq2", p,
                 {{"xi", "(1 - s^2)*gamma*gamma_star + s*(gamma*alpha*u + alpha_star*gamma_star*u_star)"},
                  {"zeta", "(1 - s^2)*alpha*gamma_star + s*(alpha^2*u - q*gamma_star^2*u_star)"},
                  {"zeta_star", "(1 - s^2)*gamma*alpha_star + s*(u_star*alpha_star^2 - q*u*gamma^2)"}});
  } else {
    set_grading(p, {{"zeta", 2}, {"zeta_star", -2}});
    p.morphisms["embed"] = morphism(
        "SUq2", p, {{"xi", "gamma*gamma_star"}, {"zeta", "alpha*gamma_star"}, {"zeta_star", "gamma*alpha_star"}});
  }
  return p;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"Uq2", "SUq2", "SUq3", "Uq4", "Sq7", "Sq4", "CP1qs", "CPq1", "U1"};
  return names;
}

Presentation builtin(const std::string& name) {
  Presentation p;
  if (name == "Uq2") {
    p = build_u2();
  } else if (name == "SUq2") {
    p = build_su2();
  } else if (name == "SUq3") {
    p = build_su3();
  } else if (name == "Uq4") {
    p = build_u4();
  } else if (name == "Sq7") {
    p = build_s7();
  } else if (name == "Sq4") {
    p = build_s4();
  } else if (name == "CP1qs") {
    p = build_podles(true);
  } else if (name == "CPq1") {
    p = build_podles(false);
  } else if (name == "U1") {
    p = build_u1();
  } else {
    throw Error(ErrorKind::UnknownBuiltin, "no builtin presentation named '" + name + "'");
  }
  p.validate();
  return p;
}

std::vector<Element> builtin_variant(const std::string& presentation, const std::string& variant) {
  std::vector<Element> out;
  if (presentation == "SUq3" && (variant == "star:printed" || variant == "star:corrected")) {
    Alphabet a(su3_names());
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) out.push_back(parse_element(su3_star_text(i, j, variant == "star:corrected"), a));
    }
    return out;
  }
  if (presentation == "Uq4" && (variant == "antipode:printed" || variant == "antipode:with_Dqinv")) {
    Alphabet a(uq4_names());
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        out.push_back(parse_element(uq4_antipode_text(i, j, variant == "antipode:with_Dqinv"), a));
      }
    }
    out.push_back(parse_element(uq4_det_text(), a));
    return out;
  }
  throw Error(ErrorKind::UnknownBuiltin, "no variant '" + variant + "' for '" + presentation + "'");
}

// ---------------------------------------------------------------------------
// file format

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ValidationError, what); }

const ordered_json& require(const ordered_json& j, const char* key) {
  if (!j.contains(key)) invalid(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) invalid(where + " must be a string");
  return j.get<std::string>();
}

template <class F>
auto in_context(const std::string& where, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + std::string(e.what()).substr(to_string(e.kind()).size() + 2));
  }
}

}  // namespace

Presentation load_presentation(const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(source);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) invalid("presentation must be a JSON object");
  Presentation p;
  p.name = as_string(require(j, "name"), "name");
  const auto& gens = require(j, "generators");
  if (!gens.is_array()) invalid("generators must be a list");
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(as_string(g, "generator"));
  p.alphabet = Alphabet(names);
  if (j.contains("degree_bound")) {
    if (!j["degree_bound"].is_number_integer()) invalid("degree_bound must be an integer");
    p.degree_bound = j["degree_bound"].get<int>();
  }
  if (j.contains("relations")) {
    std::size_t i = 0;
    for (const auto& r : j["relations"]) {
      std::string where = "relations[" + std::to_string(i++) + "]";
      std::string text = as_string(r, where);
      p.relations.push_back(in_context(where, [&] { return parse_relation(text, p.alphabet); }));
    }
  }
  if (j.contains("star")) {
    const auto& st = j["star"];
    if (st.is_array()) {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& pr : st) {
        if (!pr.is_array() || pr.size() != 2) invalid("star pairs must be two-element lists");
        std::string a = as_string(pr[0], "star"), b = as_string(pr[1], "star");
        if (p.alphabet.find(a) < 0 || p.alphabet.find(b) < 0) {
          throw Error(ErrorKind::ParseError, "star: undeclared symbol in pair (" + a + ", " + b + ")");
        }
        pairs.emplace_back(a, b);
      }
      letter_star(p, pairs);
    } else if (st.is_object() && st.contains("expr")) {
      p.star.kind = StarData::Kind::Expression;
      for (const auto& g : p.alphabet.names()) {
        std::string where = "star.expr." + g;
        p.star.images.push_back(
            in_context(where, [&] { return p.parse(as_string(require(st["expr"], g.c_str()), where)); }));
      }
    } else {
      invalid("star must be a pair list or {expr: {...}}");
    }
  }
  if (j.contains("coalgebra")) {
    const auto& co = j["coalgebra"];
    HopfData h;
    for (const auto& g : p.alphabet.names()) {
      std::string where = "coalgebra.delta." + g;
      h.delta.push_back(in_context(where, [&] { return p.parse2(as_string(require(require(co, "delta"), g.c_str()), where)); }));
      where = "coalgebra.epsilon." + g;
      h.epsilon.push_back(
          in_context(where, [&] { return Scalar::parse(as_string(require(require(co, "epsilon"), g.c_str()), where)); }));
      for (const char* key : {"antipode", "antipode_inverse"}) {
        if (!co.contains(key)) continue;
        where = std::string("coalgebra.") + key + "." + g;
        Element img = in_context(where, [&] { return p.parse(as_string(require(co[key], g.c_str()), where)); });
        (std::string(key) == "antipode" ? h.antipode : h.antipode_inverse).push_back(img);
      }
    }
    p.hopf = std::move(h);
  }
  if (j.contains("morphisms")) {
    for (const auto& [name, m] : j["morphisms"].items()) {
      MorphismData md;
      md.target = as_string(require(m, "target"), "morphisms." + name + ".target");
      std::optional<Presentation> target;
      if (md.target.rfind("builtin:", 0) == 0) target = builtin(md.target.substr(8));
      for (const auto& g : p.alphabet.names()) {
        std::string where = "morphisms." + name + ".images." + g;
        const auto& imgs = require(m, "images");
        std::string text = imgs.contains(g) ? as_string(imgs[g], where) : "0";
        if (target) in_context(where, [&] { return target->parse(text); });
        md.images.push_back(text);
      }
      if (md.target.rfind("builtin:", 0) == 0) md.target = md.target.substr(8);
      p.morphisms[name] = md;
    }
  }
  if (j.contains("quotients")) {
    for (const auto& [name, qd] : j["quotients"].items()) {
      QuotientData d;
      d.target = as_string(require(qd, "target"), "quotients." + name + ".target");
      for (const auto& g : require(qd, "ideal")) {
        std::string text = as_string(g, "quotients." + name + ".ideal");
        in_context("quotients." + name + ".ideal", [&] { return p.parse(text); });
        d.ideal_generators.push_back(text);
      }
      if (qd.contains("identification")) {
        for (const auto& [g, img] : qd["identification"].items()) d.identification[g] = as_string(img, "identification");
      }
      p.quotients[name] = d;
    }
  }
  if (j.contains("grading")) {
    p.grading.assign(p.alphabet.size(), 0);
    for (const auto& [g, w] : j["grading"].items()) {
      if (p.alphabet.find(g) < 0) throw Error(ErrorKind::ParseError, "grading: undeclared symbol '" + g + "'");
      p.grading[p.alphabet.at(g)] = w.get<int>();
    }
  }
  p.validate();
  return p;
}

std::string serialize(const Presentation& p) {
  ordered_json j;
  j["name"] = p.name;
  j["generators"] = p.alphabet.names();
  j["degree_bound"] = p.degree_bound;
  j["relations"] = ordered_json::array();
  for (const auto& r : p.relations) {
    if (r.declared_lead) {
      Element rest = Element(*r.declared_lead) - r.poly;
      j["relations"].push_back(p.alphabet.word_str(*r.declared_lead) + " = " + rest.str(p.alphabet));
    } else {
      j["relations"].push_back(r.poly.str(p.alphabet) + " = 0");
    }
  }
  if (p.star.kind == StarData::Kind::Letter) {
    j["star"] = ordered_json::array();
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
      if (g <= p.star.partner[g]) {
        j["star"].push_back({p.alphabet.name(g), p.alphabet.name(p.star.partner[g])});
      }
    }
  } else if (p.star.kind == StarData::Kind::Expression) {
    ordered_json e;
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) e[p.alphabet.name(g)] = p.star.images[g].str(p.alphabet);
    j["star"] = {{"expr", e}};
  }
  if (p.hopf) {
    ordered_json co;
    std::vector<const Alphabet*> two{&p.alphabet, &p.alphabet};
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
      const std::string& n = p.alphabet.name(g);
      co["delta"][n] = p.hopf->delta[g].str(two);
      co["epsilon"][n] = p.hopf->epsilon[g].str();
      if (!p.hopf->antipode.empty()) co["antipode"][n] = p.hopf->antipode[g].str(p.alphabet);
      if (!p.hopf->antipode_inverse.empty()) co["antipode_inverse"][n] = p.hopf->antipode_inverse[g].str(p.alphabet);
    }
    j["coalgebra"] = co;
  }
  for (const auto& [name, m] : p.morphisms) {
    ordered_json img;
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) img[p.alphabet.name(g)] = m.images[g];
    j["morphisms"][name] = {{"target", m.target}, {"images", img}};
  }
  for (const auto& [name, qd] : p.quotients) {
    j["quotients"][name] = {{"target", qd.target}, {"ideal", qd.ideal_generators}, {"identification", qd.identification}};
  }
  if (!p.grading.empty()) {
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) j["grading"][p.alphabet.name(g)] = p.grading[g];
  }
  return j.dump(2);
}

Presentation resolve_presentation(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin(spec.substr(8));
  std::ifstream in(spec);
  if (!in) throw Error(ErrorKind::Usage, "cannot open presentation file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_presentation(buf.str());
}

}  // namespace qbundle
