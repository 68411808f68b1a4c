#pragma once

#include <span>
#include <string>
#include <vector>

#include "fcomp/tables.hpp"

namespace fcomp {

/// A total order on the level set, stored as a permutation listed
/// greatest-first. geq(m=3) ranks [2,1,0]; leq(m=3) ranks [0,1,2].
class order_spec {
public:
  order_spec(domain dom, std::vector<level_t> ranking);

  static order_spec geq(domain dom);
  static order_spec leq(domain dom);

  const domain& dom() const noexcept { return dom_; }
  const std::vector<level_t>& ranking() const noexcept { return ranking_; }

  /// Rank of a level; 0 is the greatest element of the order.
  int rank(level_t value) const { return rank_.at(value); }

  /// True when x is strictly greater than y in this order.
  bool strictly_above(level_t x, level_t y) const { return rank(x) < rank(y); }

  std::string name() const;

  bool operator==(const order_spec&) const = default;

private:
  domain dom_;
  std::vector<level_t> ranking_;
  std::vector<int> rank_;
};

/// The order-greatest element of a nonempty multiset of levels.
level_t order_greatest(const order_spec& order, std::span<const level_t> levels);

/// The order-least element of a nonempty multiset of levels.
level_t order_least(const order_spec& order, std::span<const level_t> levels);

struct op_violation {
  std::vector<level_t> where; // argument tuple or level pair
  std::string reason;

  bool operator==(const op_violation&) const = default;
};

/// Outcome of the choice/modification predicates. Each predicate fills its
/// own flag; violations are nonempty exactly when that flag is false.
struct abstract_op_report {
  bool is_choice = false;
  bool is_modification = false;
  std::vector<op_violation> violations;
};

/// Does the table return the order-greatest argument on every tuple?
/// Requires arity >= 2.
abstract_op_report is_choice(const truth_table& table, const order_spec& order);

/// Is the unary table a strict order reversal and an involution?
/// Requires arity == 1.
abstract_op_report is_modification(const truth_table& table, const order_spec& order);

/// All unary tables over the domain passing is_modification, in
/// values-lexicographic order. Scans m^m candidates; refuses m > cap.
std::vector<truth_table> enumerate_modifications(domain dom, const order_spec& order,
                                                 int cap = 8);

struct composite_report {
  bool passed = false;
  std::vector<op_violation> violations;
};

/// Full-domain check of the two composite identities: modification after
/// choice reverses the greatest argument, and choice over modified arguments
/// reverses the least one. Requires a valid (choice, modification) pair.
composite_report check_composites(const truth_table& choice, const truth_table& modification,
                                  const order_spec& order);

} // namespace fcomp
