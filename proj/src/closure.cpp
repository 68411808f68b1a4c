#include "fcomp/closure.hpp"

#include <algorithm>
#include <cassert>

namespace fcomp {

namespace {

std::string key_of(const std::vector<level_t>& values) {
  return std::string(reinterpret_cast<const char*>(values.data()), values.size());
}

void check_budget(const budget& limits) {
  if (limits.max_tables < 2 || limits.max_iterations < 1)
    throw error(errc::precondition_failed, "budget must allow at least the two projections "
                                           "and one iteration");
}

// BFS closure of the binary fragment. Stops as soon as a table from
// `targets` is discovered (targets may be empty). The enumeration order is
// part of the contract: operators in declaration order, argument tuples in
// lexicographic order over discovery indices, last position fastest. New
// tables discovered in a round only become arguments in the next round, so
// recorded witnesses have minimal depth.
closure_result closure_run(const operator_set& set, const budget& limits,
                           const std::vector<truth_table>& targets, bool* hit_target) {
  check_budget(limits);
  const domain dom = set.dom();
  const std::size_t cells = table_size(dom, 2);

  closure_result result;
  result.dom = dom;
  auto add = [&](truth_table table, term witness) {
    result.index.emplace(key_of(table.values()),
                         static_cast<std::uint32_t>(result.reached.size()));
    result.reached.push_back(std::move(table));
    result.witnesses.push_back(std::move(witness));
  };
  add(projection(dom, 2, 0), term::var(0));
  add(projection(dom, 2, 1), term::var(1));

  std::vector<std::string> target_keys;
  target_keys.reserve(targets.size());
  for (const truth_table& t : targets)
    target_keys.push_back(key_of(t.values()));

  bool truncated = false;
  bool stopped = false;
  std::size_t added_last = result.reached.size();

  while (result.stats.iterations < limits.max_iterations && added_last > 0 && !stopped &&
         !truncated) {
    ++result.stats.iterations;
    const std::size_t base = result.reached.size();
    const std::size_t fresh_from = base - added_last;

    for (const named_table& op : set.ops()) {
      const auto r = static_cast<std::size_t>(op.table.arity());
      std::vector<std::size_t> idx(r, 0);
      std::vector<level_t> point(r);
      for (;;) {
        // Skip tuples made entirely of pre-round tables; those compositions
        // were already generated in an earlier round.
        const bool touches_fresh =
            std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= fresh_from; });
        if (touches_fresh) {
          std::vector<level_t> values(cells);
          for (std::size_t p = 0; p < cells; ++p) {
            for (std::size_t j = 0; j < r; ++j)
              point[j] = result.reached[idx[j]].values()[p];
            values[p] = op.table.values()[index_of_tuple(dom, point)];
          }
          ++result.stats.tables_generated;
          std::string key = key_of(values);
          if (!result.index.contains(key)) {
            if (static_cast<long>(result.reached.size()) >= limits.max_tables) {
              truncated = true;
              break;
            }
            std::vector<term> children;
            children.reserve(r);
            for (std::size_t j = 0; j < r; ++j)
              children.push_back(result.witnesses[idx[j]]);
            add(truth_table(dom, 2, std::move(values)),
                term::apply(op.name, std::move(children)));
            if (std::find(target_keys.begin(), target_keys.end(), key) != target_keys.end()) {
              stopped = true;
              break;
            }
          }
        }
        // advance the index odometer
        std::size_t j = r;
        while (j-- > 0) {
          if (++idx[j] < base)
            break;
          idx[j] = 0;
          if (j == 0)
            goto op_done;
        }
      }
    op_done:;
      if (stopped || truncated)
        break;
    }
    added_last = result.reached.size() - base;
  }

  result.stats.budget_used = static_cast<long>(result.reached.size());
  result.exhausted = !truncated && !stopped && added_last == 0;
  if (hit_target != nullptr)
    *hit_target = stopped;
  return result;
}

} // namespace

bool closure_result::contains(const truth_table& table) const {
  return index.contains(key_of(table.values()));
}

std::optional<term> closure_result::witness_for(const truth_table& table) const {
  auto it = index.find(key_of(table.values()));
  if (it == index.end())
    return std::nullopt;
  return witnesses[it->second];
}

closure_result binary_closure(const operator_set& set, const budget& limits) {
  return closure_run(set, limits, {}, nullptr);
}

bool verify_fixpoint(const operator_set& set, const closure_result& closure) {
  for (const named_table& op : set.ops()) {
    const auto r = static_cast<std::size_t>(op.table.arity());
    const std::size_t n = closure.reached.size();
    std::vector<std::size_t> idx(r, 0);
    std::vector<level_t> point(r);
    const std::size_t cells = closure.reached.empty() ? 0 : closure.reached[0].values().size();
    for (;;) {
      std::vector<level_t> values(cells);
      for (std::size_t p = 0; p < cells; ++p) {
        for (std::size_t j = 0; j < r; ++j)
          point[j] = closure.reached[idx[j]].values()[p];
        values[p] = op.table.values()[index_of_tuple(closure.dom, point)];
      }
      if (!closure.index.contains(key_of(values)))
        return false;
      std::size_t j = r;
      bool done = false;
      while (j-- > 0) {
        if (++idx[j] < n)
          break;
        idx[j] = 0;
        if (j == 0)
          done = true;
      }
      if (done)
        break;
    }
  }
  return true;
}

bool verify_witnesses(const operator_set& set, const closure_result& closure) {
  for (std::size_t i = 0; i < closure.reached.size(); ++i)
    if (table_of_term(closure.witnesses[i], set, 2) != closure.reached[i])
      return false;
  return true;
}

std::string_view to_string(sheffer_kind kind) noexcept {
  return kind == sheffer_kind::nor ? "nor" : "nand";
}

std::string_view to_string(completeness status) noexcept {
  switch (status) {
  case completeness::complete: return "complete";
  case completeness::incomplete: return "incomplete";
  case completeness::inconclusive: return "inconclusive";
  }
  return "?";
}

semi_result semi_expressive(const operator_set& set, const budget& limits) {
  const domain dom = set.dom();
  const truth_table nor2 = nor_table(dom, 2);
  const truth_table nand2 = nand_table(dom, 2);

  semi_result result;
  bool hit = false;
  result.closure = closure_run(set, limits, {nor2, nand2}, &hit);

  if (result.closure.contains(nor2)) { // reported first on a tie
    result.found = semi_result::outcome::found_nor;
    result.witness = result.closure.witness_for(nor2);
  } else if (result.closure.contains(nand2)) {
    result.found = semi_result::outcome::found_nand;
    result.witness = result.closure.witness_for(nand2);
  } else if (result.closure.exhausted) {
    result.found = semi_result::outcome::none;
  } else {
    result.found = semi_result::outcome::unknown;
  }
  return result;
}

verdict decide_complete(const operator_set& set, const budget& limits) {
  semi_result semi = semi_expressive(set, limits);

  verdict v;
  v.stats = semi.closure.stats;
  v.limits = limits;

  switch (semi.found) {
  case semi_result::outcome::found_nor:
  case semi_result::outcome::found_nand: {
    const bool is_nor = semi.found == semi_result::outcome::found_nor;
    const sheffer_kind kind = is_nor ? sheffer_kind::nor : sheffer_kind::nand;
    // Soundness audit: the witness re-tabulates to the claimed composite,
    // and the derived basis terms re-tabulate to neg/max.
    const truth_table target = is_nor ? nor_table(set.dom(), 2) : nand_table(set.dom(), 2);
    if (table_of_term(*semi.witness, set, 2) != target)
      throw error(errc::witness_invalid, "closure produced a bad sheffer witness");
    auto [neg_term, or_term] = derive_basis(set, kind, *semi.witness);
    v.status = completeness::complete;
    v.sheffer = sheffer_witness{kind, *semi.witness};
    v.neg_witness = std::move(neg_term);
    v.or_witness = std::move(or_term);
    break;
  }
  case semi_result::outcome::none: {
    assert(semi.closure.exhausted);
    if (!verify_fixpoint(set, semi.closure))
      throw error(errc::witness_invalid, "closure claimed exhaustion but is not a fixpoint");
    v.status = completeness::incomplete;
    v.certificate = "closure exhausted, " + std::to_string(semi.closure.reached.size()) +
                    " tables";
    break;
  }
  case semi_result::outcome::unknown:
    v.status = completeness::inconclusive;
    v.certificate = "budget hit after " + std::to_string(semi.closure.reached.size()) +
                    " tables, " + std::to_string(semi.closure.stats.iterations) + " iterations";
    break;
  }
  return v;
}

std::pair<term, term> derive_basis(const operator_set& set, sheffer_kind kind,
                                   const term& sheffer) {
  const domain dom = set.dom();
  const truth_table target =
      kind == sheffer_kind::nor ? nor_table(dom, 2) : nand_table(dom, 2);
  if (table_of_term(sheffer, set, 2) != target)
    throw error(errc::witness_invalid, "sheffer term does not tabulate to " +
                                           std::string(to_string(kind)) + "2");

  const term x0 = term::var(0);
  const term x1 = term::var(1);
  const term neg_term = substitute(sheffer, {x0, x0}); // diagonal of the composite

  term or_term = [&] {
    if (kind == sheffer_kind::nor) {
      // or = neg of the composite: s(s(x0,x1), s(x0,x1))
      const term s01 = substitute(sheffer, {x0, x1});
      return substitute(sheffer, {s01, s01});
    }
    // or(x,y) = s(s(x,x), s(y,y))
    const term sx = substitute(sheffer, {x0, x0});
    const term sy = substitute(sheffer, {x1, x1});
    return substitute(sheffer, {sx, sy});
  }();

  if (table_of_term(neg_term, set, 1) != neg_table(dom))
    throw error(errc::witness_invalid, "derived neg term failed pointwise verification");
  if (table_of_term(or_term, set, 2) != max_table(dom, 2))
    throw error(errc::witness_invalid, "derived or term failed pointwise verification");
  return {neg_term, or_term};
}

namespace {

// not, or and and as terms over a binary sheffer term s.
term not_via(const term& s, const term& t) { return substitute(s, {t, t}); }

term or_via_nor(const term& s, const term& a, const term& b) {
  return not_via(s, substitute(s, {a, b}));
}

term and_via_nand(const term& s, const term& a, const term& b) {
  return not_via(s, substitute(s, {a, b}));
}

} // namespace

reconstruction_report check_sheffer_reconstruction(const operator_set& set, sheffer_kind kind,
                               const term& sheffer, int n) {
  if (n < 2 || n > 4)
    throw error(errc::precondition_failed, "n must lie in [2, 4]");
  const domain dom = set.dom();
  const truth_table target =
      kind == sheffer_kind::nor ? nor_table(dom, 2) : nand_table(dom, 2);
  if (table_of_term(sheffer, set, 2) != target)
    throw error(errc::precondition_failed, "sheffer term failed pointwise verification");

  reconstruction_report report;
  report.passed = true;
  auto mismatch = [&](const std::string& what) {
    report.passed = false;
    report.mismatches.push_back(what);
  };

  // The n-ary composite built from the binary witness by a left fold:
  // nor_n(x...) = s(x0 or ... or x_{n-2}, x_{n-1}), dually for nand_n.
  std::vector<term> vars;
  for (int i = 0; i < n; ++i)
    vars.push_back(term::var(i));
  term acc = vars[0];
  for (int i = 1; i + 1 < n; ++i)
    acc = kind == sheffer_kind::nor ? or_via_nor(sheffer, acc, vars[static_cast<std::size_t>(i)])
                                    : and_via_nand(sheffer, acc, vars[static_cast<std::size_t>(i)]);
  const term composite = n == 2 ? substitute(sheffer, {vars[0], vars[1]})
                                : substitute(sheffer, {acc, vars[static_cast<std::size_t>(n - 1)]});

  const truth_table want_composite =
      kind == sheffer_kind::nor ? nor_table(dom, n) : nand_table(dom, n);
  if (table_of_term(composite, set, n) != want_composite)
    mismatch("n-ary composite does not tabulate to " + std::string(to_string(kind)) +
             std::to_string(n));

  // Choice reconstruction. NOR branch: the composite applied to n copies of
  // itself; NAND branch: the composite applied to the n diagonals.
  term choice_term = [&] {
    if (kind == sheffer_kind::nor)
      return substitute(composite, std::vector<term>(static_cast<std::size_t>(n), composite));
    std::vector<term> diagonals;
    for (int i = 0; i < n; ++i)
      diagonals.push_back(
          substitute(composite, std::vector<term>(static_cast<std::size_t>(n), vars[static_cast<std::size_t>(i)])));
    return substitute(composite, diagonals);
  }();
  const truth_table choice_got = table_of_term(choice_term, set, n);
  const truth_table choice_want = max_table(dom, n);
  if (choice_got != choice_want) {
    std::vector<level_t> args(static_cast<std::size_t>(n), 0);
    for (std::size_t p = 0; p < choice_got.values().size(); ++p) {
      if (choice_got.values()[p] != choice_want.values()[p]) {
        std::string where;
        for (level_t a : args)
          where += std::to_string(a) + " ";
        mismatch("choice reconstruction differs at (" + where + "): got " +
                 std::to_string(choice_got.values()[p]) + ", want " +
                 std::to_string(choice_want.values()[p]));
      }
      next_tuple(dom, args);
    }
  }

  // Modification reconstruction: the composite on the diagonal.
  const term diag =
      substitute(composite, std::vector<term>(static_cast<std::size_t>(n), term::var(0)));
  if (table_of_term(diag, set, 1) != neg_table(dom))
    mismatch("diagonal does not tabulate to level reversal");

  report.tuples_checked = static_cast<long>(table_size(dom, n));
  return report;
}

minimality_result is_minimal_complete(const operator_set& set, const budget& limits) {
  if (decide_complete(set, limits).status != completeness::complete)
    throw error(errc::not_complete, "minimality test requires a Complete set");

  minimality_result result;
  for (std::size_t skip = 0; skip < set.ops().size(); ++skip) {
    std::vector<named_table> rest;
    for (std::size_t i = 0; i < set.ops().size(); ++i)
      if (i != skip)
        rest.push_back(set.ops()[i]);
    if (rest.empty())
      continue; // the empty set generates only projections
    const verdict sub = decide_complete(operator_set(set.dom(), std::move(rest)), limits);
    if (sub.status == completeness::inconclusive)
      throw error(errc::inconclusive_subset,
                  "subset without " + set.ops()[skip].name + " hit the budget");
    if (sub.status == completeness::complete)
      result.removable.push_back(set.ops()[skip].name);
  }
  result.minimal = result.removable.empty();
  return result;
}

} // namespace fcomp
