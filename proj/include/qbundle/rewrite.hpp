#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbundle/element.hpp"

namespace qbundle {

/// A defining relation poly = 0. When the relation was written as
/// `word = ...`, that word is the declared leading word and must have maximal
/// degree in the relation.
struct Relation {
  Element poly;
  std::optional<Word> declared_lead;
  std::string label;
};

struct Rule {
  Word lhs;
  Element rhs;
};

enum class Strategy { Leftmost, Rightmost, Random };

/// Rule set oriented by deg-lex, completed by resolving all overlaps up to a
/// degree bound. Immutable after `complete` except for an internal cache of
/// normal forms of words, which is guarded and safe to use concurrently.
class RewriteSystem {
 public:
  static constexpr std::size_t kDefaultRuleCap = 10000;
  struct Cache;

  RewriteSystem();
  RewriteSystem(const RewriteSystem& o);
  RewriteSystem& operator=(const RewriteSystem& o);
  RewriteSystem(RewriteSystem&&) noexcept;
  RewriteSystem& operator=(RewriteSystem&&) noexcept;
  ~RewriteSystem();

  /// Diamond-lemma completion: overlaps are resolved in increasing deg-lex
  /// order of the overlap word, new rules are inter-reduced immediately.
  static RewriteSystem complete(const std::vector<Relation>& relations, int degree_bound,
                                std::size_t rule_cap = kDefaultRuleCap);
  static RewriteSystem complete(const std::vector<Element>& relations, int degree_bound,
                                std::size_t rule_cap = kDefaultRuleCap);

  const std::vector<Rule>& rules() const { return rules_; }
  int degree_bound() const { return degree_bound_; }
  int certified_to() const { return degree_bound_; }
  /// True when no overlap was skipped: the rule set is a complete system and
  /// normal forms are valid in every degree.
  bool fully_confluent() const { return fully_confluent_; }
  std::size_t rule_cap() const { return rule_cap_; }
  /// Rules produced by overlap resolution (not by an input relation).
  std::size_t added_rules() const { return added_rules_; }
  std::size_t overlaps_resolved() const { return overlaps_resolved_; }

  /// Throws DegreeBoundExceeded when deg(x) is not certified.
  void check_degree(int degree) const;

  Element normal_form(const Element& x) const;
  /// Uncached reduction with a chosen choice of redex; used to test that
  /// the result does not depend on the reduction path.
  Element normal_form(const Element& x, Strategy strategy, std::uint64_t seed = 0) const;
  Element normal_form(const Word& w) const;
  bool is_zero_mod_ideal(const Element& x) const { return normal_form(x).is_zero(); }
  bool is_normal(const Word& w) const;

  /// Normal words of degree <= degree, in increasing deg-lex order.
  std::vector<Word> monomial_basis(std::size_t alphabet_size, int degree) const;

  /// Recomputes every overlap of degree <= degree_bound from scratch and
  /// returns the words whose two one-step reductions do not join.
  std::vector<Word> unresolved_overlaps() const;

 private:
  struct Match {
    std::size_t pos;
    std::size_t rule;
  };
  std::optional<Match> find_match(const Word& w, Strategy strategy, std::uint64_t* rng) const;
  Element reduce(const Element& x, Strategy strategy, std::uint64_t seed, bool use_cache) const;
  void index_rule(std::size_t i);

  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> lhs_index_;
  std::vector<bool> lhs_lengths_;
  int degree_bound_ = 0;
  bool fully_confluent_ = true;
  std::size_t rule_cap_ = kDefaultRuleCap;
  std::size_t added_rules_ = 0;
  std::size_t overlaps_resolved_ = 0;

  std::unique_ptr<Cache> cache_;
};

}  // namespace qbundle
