#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/element.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/tensor.hpp"

namespace qbundle {

/// Star structure: either a letter involution or a generator -> element map.
struct StarData {
  enum class Kind { None, Letter, Expression };
  Kind kind = Kind::None;
  std::vector<Letter> partner;   // Kind::Letter
  std::vector<Element> images;   // Kind::Expression

  friend bool operator==(const StarData&, const StarData&) = default;
};

struct HopfData {
  std::vector<TensorElement> delta;
  std::vector<Scalar> epsilon;
  std::vector<Element> antipode;          // empty when not given
  std::vector<Element> antipode_inverse;  // empty when not given

  friend bool operator==(const HopfData&, const HopfData&) = default;
};

/// Algebra map given on generators; images are kept as text over the target
/// alphabet and parsed when the target is at hand.
struct MorphismData {
  std::string target;
  std::vector<std::string> images;

  friend bool operator==(const MorphismData&, const MorphismData&) = default;
};

/// A quotient by a right ideal together with the names the quotient
/// generators are identified with in another presentation.
struct QuotientData {
  std::string target;
  std::vector<std::string> ideal_generators;
  std::map<std::string, std::string> identification;

  friend bool operator==(const QuotientData&, const QuotientData&) = default;
};

class Presentation {
 public:
  std::string name;
  Alphabet alphabet;
  std::vector<Relation> relations;
  int degree_bound = 4;
  StarData star;
  std::optional<HopfData> hopf;
  std::map<std::string, MorphismData> morphisms;
  std::map<std::string, QuotientData> quotients;
  /// Optional Z-grading of the generators for which every relation is
  /// homogeneous; used to split linear systems into blocks.
  std::vector<int> grading;

  Element parse(std::string_view text) const;
  TensorElement parse2(std::string_view text) const;

  /// Checks names, relation degrees against declared leading words, star
  /// involutivity and that the grading makes every relation homogeneous.
  void validate() const;

  RewriteSystem complete() const { return RewriteSystem::complete(relations, degree_bound); }

  friend bool operator==(const Presentation& a, const Presentation& b);
};

/// Names accepted by `builtin`.
const std::vector<std::string>& builtin_names();
Presentation builtin(const std::string& name);

/// Alternative readings of formulas whose printed form is in doubt:
///   ("SUq3", "star:printed"), ("SUq3", "star:corrected"),
///   ("Uq4", "antipode:printed"), ("Uq4", "antipode:with_Dqinv").
std::vector<Element> builtin_variant(const std::string& presentation, const std::string& variant);

/// Reads the JSON presentation format. Morphism targets named `builtin:X`
/// are resolved to check image syntax.
Presentation load_presentation(const std::string& source);
std::string serialize(const Presentation& p);

/// Resolves `builtin:NAME` or a path to a presentation file.
Presentation resolve_presentation(const std::string& spec);

}  // namespace qbundle
