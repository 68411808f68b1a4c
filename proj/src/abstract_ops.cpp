#include "fcomp/abstract_ops.hpp"

#include <algorithm>

namespace fcomp {

order_spec::order_spec(domain dom, std::vector<level_t> ranking)
    : dom_(dom), ranking_(std::move(ranking)), rank_(static_cast<std::size_t>(dom.levels()), -1) {
  if (ranking_.size() != static_cast<std::size_t>(dom_.levels()))
    throw error(errc::length_mismatch, "ranking must list all " +
                                           std::to_string(dom_.levels()) + " levels");
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    const level_t v = ranking_[r];
    if (v >= dom_.levels())
      throw error(errc::level_out_of_range, "ranking entry " + std::to_string(v));
    if (rank_[v] != -1)
      throw error(errc::spec_invalid, "ranking repeats level " + std::to_string(v));
    rank_[v] = static_cast<int>(r);
  }
}

order_spec order_spec::geq(domain dom) {
  std::vector<level_t> ranking(static_cast<std::size_t>(dom.levels()));
  for (int i = 0; i < dom.levels(); ++i)
    ranking[static_cast<std::size_t>(i)] = static_cast<level_t>(dom.levels() - 1 - i);
  return order_spec(dom, std::move(ranking));
}

order_spec order_spec::leq(domain dom) {
  std::vector<level_t> ranking(static_cast<std::size_t>(dom.levels()));
  for (int i = 0; i < dom.levels(); ++i)
    ranking[static_cast<std::size_t>(i)] = static_cast<level_t>(i);
  return order_spec(dom, std::move(ranking));
}

std::string order_spec::name() const {
  if (*this == geq(dom_))
    return "geq";
  if (*this == leq(dom_))
    return "leq";
  std::string out = "ranking[";
  for (std::size_t i = 0; i < ranking_.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += std::to_string(ranking_[i]);
  }
  out += ']';
  return out;
}

level_t order_greatest(const order_spec& order, std::span<const level_t> levels) {
  if (levels.empty())
    throw error(errc::empty_input, "order_greatest of an empty multiset");
  level_t best = levels[0];
  for (level_t v : levels.subspan(1))
    if (order.strictly_above(v, best))
      best = v;
  return best;
}

level_t order_least(const order_spec& order, std::span<const level_t> levels) {
  if (levels.empty())
    throw error(errc::empty_input, "order_least of an empty multiset");
  level_t worst = levels[0];
  for (level_t v : levels.subspan(1))
    if (order.strictly_above(worst, v))
      worst = v;
  return worst;
}

abstract_op_report is_choice(const truth_table& table, const order_spec& order) {
  if (table.arity() < 2)
    throw error(errc::bad_arity, "choice operators have arity >= 2");
  if (table.dom() != order.dom())
    throw error(errc::domain_mismatch, "table and order over different domains");
  abstract_op_report report;
  report.is_choice = true;
  std::vector<level_t> args(static_cast<std::size_t>(table.arity()), 0);
  for (std::size_t p = 0; p < table.values().size(); ++p) {
    const level_t got = table.values()[p];
    const level_t want = order_greatest(order, args);
    if (got != want) {
      report.is_choice = false;
      report.violations.push_back({std::vector<level_t>(args.begin(), args.end()),
                                   "output " + std::to_string(got) + " != greatest " +
                                       std::to_string(want)});
    }
    next_tuple(table.dom(), args);
  }
  return report;
}

abstract_op_report is_modification(const truth_table& table, const order_spec& order) {
  if (table.arity() != 1)
    throw error(errc::bad_arity, "modification operators are unary");
  if (table.dom() != order.dom())
    throw error(errc::domain_mismatch, "table and order over different domains");
  abstract_op_report report;
  report.is_modification = true;
  const auto& f = table.values();
  const int m = table.dom().levels();
  // (a) strict order reversal on strict pairs; ties impose no constraint
  // because a function maps equal inputs to equal outputs.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const auto lx = static_cast<level_t>(x);
      const auto ly = static_cast<level_t>(y);
      if (!order.strictly_above(lx, ly))
        continue;
      if (!order.strictly_above(f[static_cast<std::size_t>(y)], f[static_cast<std::size_t>(x)])) {
        report.is_modification = false;
        report.violations.push_back({{lx, ly},
                                     "f(" + std::to_string(y) + ")=" +
                                         std::to_string(f[static_cast<std::size_t>(y)]) +
                                         " does not rank strictly above f(" + std::to_string(x) +
                                         ")=" + std::to_string(f[static_cast<std::size_t>(x)])});
      }
    }
  // (b) involution
  for (int x = 0; x < m; ++x) {
    const level_t once = f[static_cast<std::size_t>(x)];
    const level_t twice = f[once];
    if (twice != x) {
      report.is_modification = false;
      report.violations.push_back({{static_cast<level_t>(x)},
                                   "f(f(" + std::to_string(x) + "))=" + std::to_string(twice)});
    }
  }
  return report;
}

std::vector<truth_table> enumerate_modifications(domain dom, const order_spec& order, int cap) {
  if (dom.levels() > cap)
    throw error(errc::cap_exceeded, "m=" + std::to_string(dom.levels()) +
                                        " exceeds enumeration cap " + std::to_string(cap));
  std::vector<truth_table> found;
  std::vector<level_t> values(static_cast<std::size_t>(dom.levels()), 0);
  // Odometer over all m^m unary tables; lexicographic candidate order makes
  // the output canonical.
  for (;;) {
    truth_table candidate(dom, 1, values);
    if (is_modification(candidate, order).is_modification)
      found.push_back(std::move(candidate));
    if (!next_tuple(dom, values))
      break;
  }
  return found;
}

composite_report check_composites(const truth_table& choice, const truth_table& modification,
                                  const order_spec& order) {
  if (!is_choice(choice, order).is_choice || !is_modification(modification, order).is_modification)
    throw error(errc::precondition_failed,
                "check_composites needs a valid (choice, modification) pair");
  composite_report report;
  report.passed = true;
  const auto& mod = modification.values();
  std::vector<level_t> args(static_cast<std::size_t>(choice.arity()), 0);
  for (std::size_t p = 0; p < choice.values().size(); ++p) {
    // (i) modification of the chosen value reverses the greatest argument
    const level_t after_choice = mod[choice.values()[p]];
    const level_t expect_greatest = mod[order_greatest(order, args)];
    if (after_choice != expect_greatest) {
      report.passed = false;
      report.violations.push_back({std::vector<level_t>(args.begin(), args.end()),
                                   "modification(choice) = " + std::to_string(after_choice) +
                                       " != " + std::to_string(expect_greatest)});
    }
    // (ii) choice over modified arguments reverses the least argument
    std::vector<level_t> modified(args.size());
    for (std::size_t j = 0; j < args.size(); ++j)
      modified[j] = mod[args[j]];
    const level_t choice_of_mod = choice.evaluate(modified);
    const level_t expect_least = mod[order_least(order, args)];
    if (choice_of_mod != expect_least) {
      report.passed = false;
      report.violations.push_back({std::vector<level_t>(args.begin(), args.end()),
                                   "choice(modification...) = " + std::to_string(choice_of_mod) +
                                       " != " + std::to_string(expect_least)});
    }
    next_tuple(choice.dom(), args);
  }
  return report;
}

} // namespace fcomp
