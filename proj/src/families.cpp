#include "fcomp/families.hpp"

#include <algorithm>

#include "fcomp/post.hpp"

namespace fcomp {

std::string family_name(family_id family) {
  return "R" + std::to_string(static_cast<int>(family) + 1);
}

std::string_view to_string(star_op op) noexcept {
  return op == star_op::or_op ? "or" : "and";
}

std::string_view to_string(lozenge_op op) noexcept {
  return op == lozenge_op::neg ? "neg" : "negneg";
}

namespace {

bool takes_stars(family_id f) {
  return f == family_id::r5 || f == family_id::r6 || f == family_id::r7;
}

void validate(const family_spec& spec) {
  if (spec.n < 2)
    throw error(errc::spec_invalid, family_name(spec.family) + " needs n >= 2");
  const std::size_t want_stars = takes_stars(spec.family) ? static_cast<std::size_t>(spec.n - 1) : 0;
  if (spec.stars.size() != want_stars)
    throw error(errc::spec_invalid, family_name(spec.family) + " with n=" +
                                        std::to_string(spec.n) + " needs " +
                                        std::to_string(want_stars) + " stars, got " +
                                        std::to_string(spec.stars.size()));
  const std::size_t want_lozenges =
      spec.family == family_id::r7 ? static_cast<std::size_t>(spec.n) : 0;
  if (spec.lozenges.size() != want_lozenges)
    throw error(errc::spec_invalid, family_name(spec.family) + " with n=" +
                                        std::to_string(spec.n) + " needs " +
                                        std::to_string(want_lozenges) + " lozenges, got " +
                                        std::to_string(spec.lozenges.size()));
}

level_t star_eval(star_op op, level_t a, level_t b) {
  return op == star_op::or_op ? std::max(a, b) : std::min(a, b);
}

} // namespace

truth_table build_family(const family_spec& spec, domain dom) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  const std::size_t size = table_size(dom, spec.n);
  std::vector<level_t> values(size);
  std::vector<level_t> args(n, 0);
  std::vector<level_t> leaves(n);

  // R1/R2/R5 negate the folded result; R3/R4/R6 reverse every argument
  // instead; R7 reverses per-argument as its lozenges say.
  const bool negate_result = spec.family == family_id::r1 || spec.family == family_id::r2 ||
                             spec.family == family_id::r5;
  const bool reverse_leaves = spec.family == family_id::r3 || spec.family == family_id::r4 ||
                              spec.family == family_id::r6;
  const star_op fixed_star = spec.family == family_id::r1 || spec.family == family_id::r3
                                 ? star_op::or_op
                                 : star_op::and_op;

  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.family == family_id::r7)
        leaves[j] = spec.lozenges[j] == lozenge_op::neg ? dom.reversal(args[j]) : args[j];
      else
        leaves[j] = reverse_leaves ? dom.reversal(args[j]) : args[j];
    }

    // Left fold, exactly as parenthesized: (((l1 * l2) * l3) ... * ln).
    level_t acc = leaves[0];
    for (std::size_t k = 1; k < n; ++k) {
      const star_op star = takes_stars(spec.family) ? spec.stars[k - 1] : fixed_star;
      acc = star_eval(star, acc, leaves[k]);
    }
    values[p] = negate_result ? dom.reversal(acc) : acc;
    next_tuple(dom, args);
  }
  return truth_table(dom, spec.n, std::move(values));
}

namespace {

completeness claimed_verdict(family_id family) {
  return family == family_id::r7 ? completeness::incomplete : completeness::complete;
}

regression_row run_instance(const family_spec& spec, const budget& limits) {
  const domain two(2);
  const truth_table table = build_family(spec, two);
  const operator_set set(two, {{family_name(spec.family), table}});

  regression_row row;
  row.spec = spec;
  row.claimed = claimed_verdict(spec.family);
  row.engine = decide_complete(set, limits).status;
  row.oracle_complete = post_complete(set).complete;
  row.agree = (row.engine == completeness::complete) == row.oracle_complete &&
              row.engine != completeness::inconclusive;
  const completeness oracle_status =
      row.oracle_complete ? completeness::complete : completeness::incomplete;
  row.discrepancy = row.claimed != row.engine && row.claimed != oracle_status;
  return row;
}

// Selections enumerate lexicographically with the first position most
// significant; or < and, neg < negneg.
std::vector<std::vector<star_op>> all_star_selections(int count) {
  std::vector<std::vector<star_op>> out;
  const std::size_t total = std::size_t{1} << count;
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<star_op> stars;
    for (int k = 0; k < count; ++k)
      stars.push_back((mask >> (count - 1 - k)) & 1 ? star_op::and_op : star_op::or_op);
    out.push_back(std::move(stars));
  }
  return out;
}

std::vector<std::vector<lozenge_op>> lozenge_selections_with_negneg(int count) {
  std::vector<std::vector<lozenge_op>> out;
  const std::size_t total = std::size_t{1} << count;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (mask == 0)
      continue; // all-neg has no negneg; the stated claim does not cover it
    std::vector<lozenge_op> lozenges;
    for (int k = 0; k < count; ++k)
      lozenges.push_back((mask >> (count - 1 - k)) & 1 ? lozenge_op::negneg : lozenge_op::neg);
    out.push_back(std::move(lozenges));
  }
  return out;
}

} // namespace

std::vector<regression_row> family_regression(const budget& limits) {
  std::vector<regression_row> rows;

  for (family_id family : {family_id::r1, family_id::r2, family_id::r3, family_id::r4})
    for (int n : {2, 3, 4})
      rows.push_back(run_instance({family, n, {}, {}}, limits));

  for (family_id family : {family_id::r5, family_id::r6})
    for (int n : {2, 3})
      for (auto& stars : all_star_selections(n - 1))
        rows.push_back(run_instance({family, n, stars, {}}, limits));

  for (int n : {2, 3})
    for (auto& stars : all_star_selections(n - 1))
      for (auto& lozenges : lozenge_selections_with_negneg(n))
        rows.push_back(run_instance({family_id::r7, n, stars, lozenges}, limits));

  return rows;
}

} // namespace fcomp
