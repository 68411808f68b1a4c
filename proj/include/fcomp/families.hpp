#pragma once

#include <string>
#include <vector>

#include "fcomp/closure.hpp"
#include "fcomp/tables.hpp"

namespace fcomp {

// Generators for the operator families R1..R7 and the regression harness
// that compares their claimed completeness against the closure engine and
// the Post oracle.

enum class family_id { r1, r2, r3, r4, r5, r6, r7 };

enum class star_op : std::uint8_t { or_op, and_op };       // level max / level min
enum class lozenge_op : std::uint8_t { neg, negneg };      // reversal / identity

std::string family_name(family_id family);
std::string_view to_string(star_op op) noexcept;
std::string_view to_string(lozenge_op op) noexcept;

struct family_spec {
  family_id family = family_id::r1;
  int n = 2;
  std::vector<star_op> stars;       // n-1 entries for R5..R7, empty otherwise
  std::vector<lozenge_op> lozenges; // n entries for R7, empty otherwise

  bool operator==(const family_spec&) const = default;
};

/// The n-ary table of a family instance. Folds associate strictly left:
/// R1 = neg(((a1 v a2) ...) v an), R2 the min dual, R3/R4 fold over reversed
/// arguments, R5/R6 generalize with per-position stars, R7 additionally
/// applies a per-argument lozenge (negneg is the identity on levels).
truth_table build_family(const family_spec& spec, domain dom);

struct regression_row {
  family_spec spec;
  completeness claimed;   // the stated verdict for this instance
  completeness engine;
  bool oracle_complete = false;
  bool agree = false;       // engine vs oracle (hard invariant)
  bool discrepancy = false; // claim contradicted by both engine and oracle
};

/// Two-valued regression sweep: R1-R4 at n in {2,3,4}; R5/R6 over every star
/// selection at n in {2,3}; R7 over every star/lozenge selection with at
/// least one negneg at n in {2,3}. Rows are emitted in canonical order
/// (family, n, stars, lozenges ascending).
std::vector<regression_row> family_regression(const budget& limits);

} // namespace fcomp
