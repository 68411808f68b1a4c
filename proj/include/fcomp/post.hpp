#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fcomp/tables.hpp"

namespace fcomp {

// Independent two-valued ground truth: Post's five-class completeness
// criterion. Implemented from the class definitions only, with no code
// shared with the closure engine, so agreement between the two is evidence
// rather than tautology.

struct post_classes {
  bool preserves0 = false;
  bool preserves1 = false;
  bool monotone = false;
  bool self_dual = false;
  bool affine = false;

  bool operator==(const post_classes&) const = default;
};

inline constexpr std::array<std::string_view, 5> post_class_names = {
    "preserves0", "preserves1", "monotone", "self_dual", "affine"};

/// Membership of a two-valued table in each of the five Post classes.
post_classes class_membership(const truth_table& table);

/// Algebraic normal form of a two-valued table: coefficient c_S per variable
/// subset S (indexed like table positions), with f(x) = XOR over S subset of
/// supp(x) of c_S.
std::vector<level_t> anf(const truth_table& table);

/// Evaluates ANF coefficients back into a table (round-trip inverse of anf).
truth_table table_of_anf(const domain& dom, int arity, const std::vector<level_t>& coeffs);

struct post_result {
  bool complete = false;
  // For each class (post_class_names order): the first declared operator
  // escaping it, if any.
  std::array<std::optional<std::string>, 5> escaper;
  // Classes containing every member (nonempty iff incomplete).
  std::vector<std::string> violated;
  // Per-operator class matrix, declaration order.
  std::vector<std::pair<std::string, post_classes>> matrix;
};

/// Post's completeness theorem: a two-valued set is complete iff for each of
/// the five classes some member lies outside it.
post_result post_complete(const operator_set& set);

} // namespace fcomp
