#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcomp/errors.hpp"

namespace fcomp {

/// A truth level code. Level i over a domain with m levels stands for the
/// truth value i/(m-1), so 0 is falsity, m-1 is truth.
using level_t = std::uint8_t;

/// Finite chain of truth levels {0, 1/(m-1), ..., 1}, stored as codes 0..m-1.
class domain {
public:
  explicit domain(int levels);

  int levels() const noexcept { return m_; }

  /// Level reversal i -> m-1-i, the code-level form of v -> 1-v.
  level_t reversal(level_t value) const noexcept {
    return static_cast<level_t>(m_ - 1 - value);
  }

  bool operator==(const domain&) const = default;

private:
  int m_;
};

/// Dense table of an n-adic function V_m^n -> V_m. Entries are indexed in
/// argument-major order: tuple (a1,...,an) sits at position
/// sum a_j * m^(n-j), so the first argument is most significant and the
/// two-valued binary table reads in the conventional row order 00,01,10,11.
class truth_table {
public:
  truth_table(domain dom, int arity, std::vector<level_t> values);

  const domain& dom() const noexcept { return dom_; }
  int arity() const noexcept { return arity_; }
  const std::vector<level_t>& values() const noexcept { return values_; }

  /// Looks up the table entry for an argument tuple.
  level_t evaluate(std::span<const level_t> args) const;

  bool operator==(const truth_table&) const = default;

private:
  domain dom_;
  int arity_;
  std::vector<level_t> values_;
};

/// Number of entries in an arity-`arity` table over m levels, with an
/// overflow/size guard (throws cap_exceeded past the supported maximum).
std::size_t table_size(const domain& dom, int arity);

/// Position of an argument tuple in the argument-major value vector.
std::size_t index_of_tuple(const domain& dom, std::span<const level_t> args);

/// Inverse of index_of_tuple; writes the tuple for `index` into `out`.
void tuple_of_index(const domain& dom, std::size_t index, std::span<level_t> out);

/// Advances `args` to the next tuple in argument-major order; returns false
/// once the tuple wraps back to all zeros.
bool next_tuple(const domain& dom, std::span<level_t> args) noexcept;

/// Expression tree over named operators and 0-based variable leaves.
/// A term does not fix its variable count; callers state it when evaluating.
class term {
public:
  static term var(int index);
  static term apply(std::string op_name, std::vector<term> args);

  bool is_var() const noexcept { return op_.empty(); }
  int var_index() const;
  const std::string& op_name() const;
  const std::vector<term>& args() const;

  int depth() const noexcept;
  int max_var_index() const noexcept;

  /// Prefix notation: variables print as x0, x1, ...; applications as
  /// NAME(child,...).
  std::string to_string() const;

  bool operator==(const term&) const = default;

private:
  term() = default;

  int var_ = -1;
  std::string op_;
  std::vector<term> children_;
};

/// Replaces Var(i) with replacements[i] throughout `t`.
term substitute(const term& t, const std::vector<term>& replacements);

struct named_table {
  std::string name;
  truth_table table;

  bool operator==(const named_table&) const = default;
};

/// A named, nonempty collection of truth tables over one domain.
/// Declaration order is preserved and is the canonical iteration order.
class operator_set {
public:
  operator_set(domain dom, std::vector<named_table> ops);

  const domain& dom() const noexcept { return dom_; }
  const std::vector<named_table>& ops() const noexcept { return ops_; }

  const truth_table* find(std::string_view name) const noexcept;

  bool operator==(const operator_set&) const = default;

private:
  domain dom_;
  std::vector<named_table> ops_;
};

/// Validates and builds a table from raw values (copied verbatim).
truth_table make_table(domain dom, int arity, std::vector<level_t> values);

/// Homomorphic term evaluation: Var(i) -> args[i], Apply -> table lookup on
/// recursively evaluated children.
level_t eval_term(const term& t, const operator_set& set, std::span<const level_t> args);

/// Tabulates a term over all m^var_count argument tuples.
truth_table table_of_term(const term& t, const operator_set& set, int var_count);

/// Pointwise composition: result(a) = outer(inner1(a), ..., innerR(a)).
truth_table compose(const truth_table& outer, const std::vector<truth_table>& inners,
                    int var_count);

/// The var_count-ary table returning argument i everywhere.
truth_table projection(domain dom, int var_count, int i);

// Canonical connectives on the level chain. neg is level reversal; max/min
// are the level lattice operations; nor_n = neg . max_n, nand_n = neg . min_n.
truth_table neg_table(domain dom);
truth_table max_table(domain dom, int arity);
truth_table min_table(domain dom, int arity);
truth_table nor_table(domain dom, int arity);
truth_table nand_table(domain dom, int arity);

/// The named set {neg, max2, min2, nor2, nand2, nor<n>, nand<n>} (the n-ary
/// pair is added when n > 2).
operator_set canonical_tables(domain dom, int n = 2);

} // namespace fcomp
