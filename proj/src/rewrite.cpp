#include "qbundle/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <tuple>

#include "qbundle/error.hpp"

namespace qbundle {

struct RewriteSystem::Cache {
  static constexpr std::size_t kMaxEntries = 400000;
  std::mutex mutex;
  std::unordered_map<Word, Element, WordHash> nf;

  const Element* find(const Word& w) {
    std::lock_guard lock(mutex);
    auto it = nf.find(w);
    return it == nf.end() ? nullptr : &it->second;
  }
  void store(const Word& w, const Element& x) {
    std::lock_guard lock(mutex);
    if (nf.size() < kMaxEntries) nf.emplace(w, x);
  }
};

namespace {

bool contains(const Word& big, const Word& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t p = 0; p + small.size() <= big.size(); ++p) {
    if (big.contains_at(p, small)) return true;
  }
  return false;
}

std::uint64_t next_random(std::uint64_t& state) {
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Shared rule lookup for the completion state and the finished system.
struct Matcher {
  const std::unordered_map<Word, std::size_t, WordHash>& index;
  const std::vector<std::size_t>& lengths;

  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& w, Strategy strategy,
                                                          std::uint64_t* rng) const {
    std::size_t n = w.size();
    if (strategy == Strategy::Random) {
      std::vector<std::pair<std::size_t, std::size_t>> all;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t len : lengths) {
          if (p + len > n) break;
          auto it = index.find(w.subword(p, len));
          if (it != index.end()) all.emplace_back(p, it->second);
        }
      }
      if (all.empty()) return std::nullopt;
      return all[next_random(*rng) % all.size()];
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t p = strategy == Strategy::Leftmost ? i : n - 1 - i;
      for (std::size_t len : lengths) {
        if (p + len > n) break;
        auto it = index.find(w.subword(p, len));
        if (it != index.end()) return std::make_pair(p, it->second);
      }
    }
    return std::nullopt;
  }
};

template <class RuleAt>
Element reduce_terms(const Element& x, const Matcher& matcher, RuleAt rule_at, Strategy strategy,
                     std::uint64_t seed, RewriteSystem::Cache* cache) {
  std::map<Word, Scalar> work(x.begin(), x.end());
  std::uint64_t rng = seed;
  Element result;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = std::move(it->second);
    work.erase(it);
    if (cache) {
      if (const Element* known = cache->find(w)) {
        result.add_scaled(*known, c);
        continue;
      }
    }
    auto m = matcher.find(w, strategy, &rng);
    if (!m) {
      result.add(w, c);
      continue;
    }
    const Rule& r = rule_at(m->second);
    Word a = w.subword(0, m->first);
    Word b = w.subword(m->first + r.lhs.size(), w.size() - m->first - r.lhs.size());
    for (const auto& [rw, rc] : r.rhs) {
      Word nw = a * rw * b;
      Scalar nc = c * rc;
      auto [jt, inserted] = work.try_emplace(nw, nc);
      if (!inserted) {
        jt->second += nc;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return result;
}

std::vector<std::size_t> lengths_of(const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> out;
  for (std::size_t len = 0; len < counts.size(); ++len) {
    if (counts[len] > 0) out.push_back(len);
  }
  return out;
}

struct Overlap {
  Word word;
  std::size_t left;
  std::size_t right;
  std::size_t shared;

  friend bool operator<(const Overlap& a, const Overlap& b) {
    return std::tie(a.word, a.left, a.right, a.shared) < std::tie(b.word, b.left, b.right, b.shared);
  }
};

// Proper overlaps u = a*b, v = b*c with b nonempty; `emit` receives the
// overlap and its degree.
template <class Emit>
void overlaps_of(const Rule& u, std::size_t iu, const Rule& v, std::size_t iv, Emit emit) {
  std::size_t lu = u.lhs.size(), lv = v.lhs.size();
  for (std::size_t k = 1; k < lu && k < lv; ++k) {
    if (!u.lhs.contains_at(lu - k, v.lhs.subword(0, k))) continue;
    emit(Overlap{Word{}, iu, iv, k}, lu + lv - k);
  }
}

Element s_poly(const Rule& u, const Rule& v, std::size_t k) {
  Word a = u.lhs.subword(0, u.lhs.size() - k);
  Word c = v.lhs.subword(k, v.lhs.size() - k);
  return u.rhs * Element(c) - Element(a) * v.rhs;
}

Element rule_poly(const Rule& r) { return Element(r.lhs) - r.rhs; }

class Completion {
 public:
  Completion(int bound, std::size_t cap) : bound_(bound), cap_(cap) {}

  void run(const std::vector<Relation>& relations) {
    for (const auto& rel : relations) pending_.emplace_back(rel.poly, true);
    while (true) {
      drain();
      if (pairs_.empty()) break;
      Overlap o = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (!live_[o.left] || !live_[o.right]) continue;
      ++resolved_;
      Element s = reduce(s_poly(rules_[o.left], rules_[o.right], o.shared));
      if (!s.is_zero()) pending_.emplace_back(std::move(s), false);
    }
  }

  std::vector<Rule> live_rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (live_[i]) out.push_back(rules_[i]);
    }
    std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) { return a.lhs < b.lhs; });
    return out;
  }
  std::size_t added() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i) n += live_[i] && !from_input_[i];
    return n;
  }
  bool skipped() const { return skipped_; }
  std::size_t resolved() const { return resolved_; }

 private:
  Element reduce(const Element& x) {
    std::vector<std::size_t> lengths = lengths_of(length_counts_);
    Matcher m{index_, lengths};
    return reduce_terms(
        x, m, [this](std::size_t i) -> const Rule& { return rules_[i]; }, Strategy::Leftmost, 0, nullptr);
  }

  void drain() {
    while (!pending_.empty()) {
      auto [p, input] = std::move(pending_.front());
      pending_.pop_front();
      p = reduce(p);
      if (!p.is_zero()) add_rule(p, input);
    }
  }

  void add_rule(const Element& p, bool input) {
    if (rules_.size() >= cap_) {
      throw Error(ErrorKind::RuleCapExceeded, "completion exceeded " + std::to_string(cap_) + " rules");
    }
    Word lead = p.lead_word();
    Scalar inv = p.lead_coef().inverse();
    Element rhs;
    for (const auto& [w, c] : p) {
      if (!(w == lead)) rhs.add(w, -c * inv);
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (live_[i] && contains(rules_[i].lhs, lead)) {
        live_[i] = false;
        index_.erase(rules_[i].lhs);
        --length_counts_[rules_[i].lhs.size()];
        pending_.emplace_back(rule_poly(rules_[i]), from_input_[i]);
      }
    }
    std::size_t id = rules_.size();
    rules_.push_back(Rule{lead, std::move(rhs)});
    live_.push_back(true);
    from_input_.push_back(input);
    index_.emplace(lead, id);
    if (length_counts_.size() <= lead.size()) length_counts_.resize(lead.size() + 1, 0);
    ++length_counts_[lead.size()];
    for (std::size_t i = 0; i < id; ++i) {
      if (!live_[i]) continue;
      bool touched = std::any_of(rules_[i].rhs.begin(), rules_[i].rhs.end(),
                                 [&](const auto& t) { return contains(t.first, lead); });
      if (touched) rules_[i].rhs = reduce(rules_[i].rhs);
    }
    for (std::size_t i = 0; i <= id; ++i) {
      if (!live_[i]) continue;
      add_pairs(id, i);
      if (i != id) add_pairs(i, id);
    }
  }

  void add_pairs(std::size_t iu, std::size_t iv) {
    overlaps_of(rules_[iu], iu, rules_[iv], iv, [&](Overlap o, std::size_t degree) {
      if (static_cast<int>(degree) > bound_) {
        skipped_ = true;
        return;
      }
      const Word& u = rules_[iu].lhs;
      o.word = u * rules_[iv].lhs.subword(o.shared, rules_[iv].lhs.size() - o.shared);
      pairs_.insert(o);
    });
  }

  int bound_;
  std::size_t cap_;
  std::vector<Rule> rules_;
  std::vector<bool> live_;
  std::vector<bool> from_input_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::size_t> length_counts_;
  std::set<Overlap> pairs_;
  std::deque<std::pair<Element, bool>> pending_;
  bool skipped_ = false;
  std::size_t resolved_ = 0;
};

}  // namespace

RewriteSystem::RewriteSystem() : cache_(std::make_unique<Cache>()) {}
RewriteSystem::RewriteSystem(const RewriteSystem& o)
    : rules_(o.rules_),
      lhs_index_(o.lhs_index_),
      lhs_lengths_(o.lhs_lengths_),
      degree_bound_(o.degree_bound_),
      fully_confluent_(o.fully_confluent_),
      rule_cap_(o.rule_cap_),
      added_rules_(o.added_rules_),
      overlaps_resolved_(o.overlaps_resolved_),
      cache_(std::make_unique<Cache>()) {}
RewriteSystem& RewriteSystem::operator=(const RewriteSystem& o) {
  if (this != &o) *this = RewriteSystem(o);
  return *this;
}
RewriteSystem::RewriteSystem(RewriteSystem&&) noexcept = default;
RewriteSystem& RewriteSystem::operator=(RewriteSystem&&) noexcept = default;
RewriteSystem::~RewriteSystem() = default;

void RewriteSystem::index_rule(std::size_t i) {
  const Word& lhs = rules_[i].lhs;
  lhs_index_.emplace(lhs, i);
  if (lhs_lengths_.size() <= lhs.size()) lhs_lengths_.resize(lhs.size() + 1, false);
  lhs_lengths_[lhs.size()] = true;
}

RewriteSystem RewriteSystem::complete(const std::vector<Relation>& relations, int degree_bound,
                                      std::size_t rule_cap) {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Relation& rel = relations[i];
    std::string name = rel.label.empty() ? "#" + std::to_string(i + 1) : "'" + rel.label + "'";
    if (rel.poly.is_zero()) throw Error(ErrorKind::ValidationError, "relation " + name + " is trivially zero");
    if (rel.declared_lead && static_cast<int>(rel.declared_lead->size()) < rel.poly.degree()) {
      throw Error(ErrorKind::DegreeIncompatibleRelation,
                  "relation " + name + ": leading word has degree " + std::to_string(rel.declared_lead->size()) +
                      " but the relation has degree " + std::to_string(rel.poly.degree()));
    }
  }
  Completion c(degree_bound, rule_cap);
  c.run(relations);
  RewriteSystem rs;
  rs.rules_ = c.live_rules();
  for (std::size_t i = 0; i < rs.rules_.size(); ++i) rs.index_rule(i);
  rs.degree_bound_ = degree_bound;
  rs.fully_confluent_ = !c.skipped();
  rs.rule_cap_ = rule_cap;
  rs.added_rules_ = c.added();
  rs.overlaps_resolved_ = c.resolved();
  return rs;
}

RewriteSystem RewriteSystem::complete(const std::vector<Element>& relations, int degree_bound,
                                      std::size_t rule_cap) {
  std::vector<Relation> rels;
  for (const auto& r : relations) rels.push_back(Relation{r, std::nullopt, ""});
  return complete(rels, degree_bound, rule_cap);
}

void RewriteSystem::check_degree(int degree) const {
  if (degree > degree_bound_ && !fully_confluent_) {
    throw Error(ErrorKind::DegreeBoundExceeded, "degree " + std::to_string(degree) +
                                                    " exceeds the certified bound " + std::to_string(degree_bound_));
  }
}

Element RewriteSystem::reduce(const Element& x, Strategy strategy, std::uint64_t seed, bool use_cache) const {
  std::vector<std::size_t> lengths;
  for (std::size_t len = 0; len < lhs_lengths_.size(); ++len) {
    if (lhs_lengths_[len]) lengths.push_back(len);
  }
  Matcher m{lhs_index_, lengths};
  auto rule_at = [this](std::size_t i) -> const Rule& { return rules_[i]; };
  if (!use_cache) return reduce_terms(x, m, rule_at, strategy, seed, nullptr);
  Element result;
  for (const auto& [w, c] : x) {
    const Element* known = cache_->find(w);
    if (known) {
      result.add_scaled(*known, c);
      continue;
    }
    Element nf = reduce_terms(Element(w), m, rule_at, strategy, seed, cache_.get());
    cache_->store(w, nf);
    result.add_scaled(nf, c);
  }
  return result;
}

Element RewriteSystem::normal_form(const Element& x) const {
  check_degree(x.degree());
  return reduce(x, Strategy::Leftmost, 0, true);
}

Element RewriteSystem::normal_form(const Element& x, Strategy strategy, std::uint64_t seed) const {
  check_degree(x.degree());
  return reduce(x, strategy, seed, false);
}

Element RewriteSystem::normal_form(const Word& w) const { return normal_form(Element(w)); }

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t len = 1; len < lhs_lengths_.size() && p + len <= w.size(); ++len) {
      if (lhs_lengths_[len] && lhs_index_.count(w.subword(p, len))) return false;
    }
  }
  return true;
}

std::vector<Word> RewriteSystem::monomial_basis(std::size_t alphabet_size, int degree) const {
  check_degree(degree);
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int d = 1; d <= degree; ++d) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < alphabet_size; ++g) {
        Word w = out[i];
        w.push_back(static_cast<Letter>(g));
        // The prefix is normal, so only suffixes can match.
        bool normal = true;
        for (std::size_t len = 1; len < lhs_lengths_.size() && len <= w.size(); ++len) {
          if (lhs_lengths_[len] && lhs_index_.count(w.subword(w.size() - len, len))) {
            normal = false;
            break;
          }
        }
        if (normal) out.push_back(w);
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Word> RewriteSystem::unresolved_overlaps() const {
  std::vector<Word> bad;
  std::set<Overlap> all;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      overlaps_of(rules_[i], i, rules_[j], j, [&](Overlap o, std::size_t degree) {
        if (static_cast<int>(degree) > degree_bound_) return;
        o.word = rules_[i].lhs * rules_[j].lhs.subword(o.shared, rules_[j].lhs.size() - o.shared);
        all.insert(o);
      });
    }
  }
  for (const Overlap& o : all) {
    if (!reduce(s_poly(rules_[o.left], rules_[o.right], o.shared), Strategy::Leftmost, 0, false).is_zero()) {
      bad.push_back(o.word);
    }
  }
  return bad;
}

}  // namespace qbundle
