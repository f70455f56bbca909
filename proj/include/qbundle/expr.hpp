#pragma once

#include <string_view>
#include <vector>

#include "qbundle/element.hpp"
#include "qbundle/rewrite.hpp"
#include "qbundle/tensor.hpp"

namespace qbundle {

// Grammar shared by presentation files and the command line:
//
//   sum     := tterm (('+' | '-') tterm)*
//   tterm   := ['-'] product ('(x)' product)*
//   product := power (('*' | '/') power)*
//   power   := primary ['^' ['-'] integer]
//   primary := integer | identifier | '(' sum ')'
//
// `q` and `s` are the field parameters; every other identifier must be a
// generator of the alphabet of its tensor leg. Division and negative powers
// are only allowed for scalar operands.

Element parse_element(std::string_view text, const Alphabet& alphabet);

/// Parses an element of the tensor product whose legs use `legs` alphabets.
/// Every tensor term must name exactly legs.size() factors.
TensorElement parse_tensor(std::string_view text, const std::vector<const Alphabet*>& legs);

/// Parses `lhs = rhs`. A lhs that is a single word becomes the declared
/// leading word of the relation.
Relation parse_relation(std::string_view text, const Alphabet& alphabet);

}  // namespace qbundle
