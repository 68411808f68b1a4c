// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fcomp/abstract_ops.hpp"
#include "fcomp/cli.hpp"
#include "fcomp/closure.hpp"
#include "fcomp/families.hpp"
#include "fcomp/post.hpp"
#include "fcomp/report.hpp"
#include "fcomp/tables.hpp"

using namespace fcomp;

namespace {

struct checker {
  int failures = 0;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ++failures;
      if (detail.size() < 400)
        detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// Verdicts produced while running criteria 1-8, re-audited by criterion 9.
struct audit_entry {
  operator_set set;
  verdict v;
};

std::vector<audit_entry> g_audits;

const budget g_budget{};
const domain g_two{2};

std::vector<named_table> boolean_survey_tables() {
  std::vector<named_table> out;
  for (int arity : {1, 2}) {
    std::vector<level_t> values(table_size(g_two, arity), 0);
    for (;;) {
      std::string name(arity == 1 ? "u" : "b");
      for (level_t v : values)
        name += std::to_string(v);
      out.push_back({name, truth_table(g_two, arity, values)});
      if (!next_tuple(g_two, values))
        break;
    }
  }
  return out;
}

// 1. Agreement sweep (m=2): singletons and pairs, engine status
//    equals oracle status, zero inconclusive verdicts.
void criterion1(checker& check) {
  const std::vector<named_table> tables = boolean_survey_tables();
  std::vector<std::vector<named_table>> sets;
  for (const named_table& t : tables)
    sets.push_back({t});
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      sets.push_back({tables[i], tables[j]});
  check.expect(sets.size() == 210, "expected 20 singletons + 190 pairs");

  for (const auto& members : sets) {
    const operator_set set(g_two, members);
    const verdict v = decide_complete(set, g_budget);
    const post_result oracle = post_complete(set);
    check.expect(v.status != completeness::inconclusive,
                 "inconclusive at " + members[0].name);
    check.expect((v.status == completeness::complete) == oracle.complete,
                 "engine/oracle split at " + members[0].name +
                     (members.size() > 1 ? "+" + members[1].name : ""));
    g_audits.push_back({set, v});
  }
}

// 2. Sheffer census (m=2): among binary singletons exactly the NOR and NAND
//    tables are complete.
void criterion2(checker& check) {
  std::vector<std::string> complete_names;
  std::vector<level_t> values(4, 0);
  for (;;) {
    std::string name = "b";
    for (level_t v : values)
      name += std::to_string(v);
    const operator_set set(g_two, {{name, truth_table(g_two, 2, values)}});
    if (decide_complete(set, g_budget).status == completeness::complete)
      complete_names.push_back(name);
    if (!next_tuple(g_two, values))
      break;
  }
  check.expect(complete_names == std::vector<std::string>{"b1000", "b1110"},
               "complete binary singletons are not exactly {NOR, NAND}");
}

// 3. For m in 2..7 and both orders the modification enumeration returns
//    exactly the level reversal.
void criterion3(checker& check) {
  for (int m = 2; m <= 7; ++m) {
    const domain dom(m);
    for (const order_spec& order : {order_spec::geq(dom), order_spec::leq(dom)}) {
      const auto found = enumerate_modifications(dom, order);
      check.expect(found.size() == 1, "m=" + std::to_string(m) + ": not a singleton");
      check.expect(!found.empty() && found.front() == neg_table(dom),
                   "m=" + std::to_string(m) + ": not the level reversal");
    }
  }
}

// 4. Enumerated modifications are level permutations with
//    strict order reversal; composite checks pass on the canonical pairs.
void criterion4(checker& check) {
  for (int m = 2; m <= 7; ++m) {
    const domain dom(m);
    for (const order_spec& order : {order_spec::geq(dom), order_spec::leq(dom)}) {
      for (const truth_table& f : enumerate_modifications(dom, order)) {
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (level_t v : f.values()) {
          check.expect(!seen[v], "m=" + std::to_string(m) + ": not a bijection");
          seen[v] = true;
        }
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            if (order.strictly_above(static_cast<level_t>(x), static_cast<level_t>(y)))
              check.expect(order.strictly_above(f.values()[static_cast<std::size_t>(y)],
                                                f.values()[static_cast<std::size_t>(x)]),
                           "m=" + std::to_string(m) + ": reversal not strict");
      }
    }
  }
  for (int m : {2, 3}) {
    const domain dom(m);
    for (int n : {2, 3}) {
      for (const truth_table& mod : enumerate_modifications(dom, order_spec::geq(dom)))
        check.expect(check_composites(max_table(dom, n), mod, order_spec::geq(dom)).passed,
                     "composite violations for max, m=" + std::to_string(m));
      for (const truth_table& mod : enumerate_modifications(dom, order_spec::leq(dom)))
        check.expect(check_composites(min_table(dom, n), mod, order_spec::leq(dom)).passed,
                     "composite violations for min, m=" + std::to_string(m));
    }
  }
}

// 5. Reconstruction checks for {nor2} and {nand2} at n in {2,3,4},
//    m in {2,3}: zero mismatches.
void criterion5(checker& check) {
  for (int m : {2, 3}) {
    const domain dom(m);
    const operator_set nor_set(dom, {{"nor", nor_table(dom, 2)}});
    const operator_set nand_set(dom, {{"nand", nand_table(dom, 2)}});
    const term nor_t = term::apply("nor", {term::var(0), term::var(1)});
    const term nand_t = term::apply("nand", {term::var(0), term::var(1)});
    for (int n : {2, 3, 4}) {
      const reconstruction_report a = check_sheffer_reconstruction(nor_set, sheffer_kind::nor, nor_t, n);
      const reconstruction_report b = check_sheffer_reconstruction(nand_set, sheffer_kind::nand, nand_t, n);
      check.expect(a.passed && a.mismatches.empty(),
                   "nor construction fails at m=" + std::to_string(m) + ", n=" +
                       std::to_string(n));
      check.expect(b.passed && b.mismatches.empty(),
                   "nand construction fails at m=" + std::to_string(m) + ", n=" +
                       std::to_string(n));
    }
  }
}

// 6. R1-R4 at n in {2,3,4}, m=2 -> 12/12 complete, oracle agrees.
void criterion6(checker& check) {
  int complete_count = 0;
  for (family_id family : {family_id::r1, family_id::r2, family_id::r3, family_id::r4})
    for (int n : {2, 3, 4}) {
      const truth_table table = build_family({family, n, {}, {}}, g_two);
      const operator_set set(g_two, {{family_name(family), table}});
      const verdict v = decide_complete(set, g_budget);
      const post_result oracle = post_complete(set);
      if (v.status == completeness::complete)
        ++complete_count;
      check.expect(oracle.complete, family_name(family) + " n=" + std::to_string(n) +
                                        ": oracle disagrees");
      g_audits.push_back({set, v});
    }
  check.expect(complete_count == 12, "R1-R4 should give 12 complete instances");
}

// 7. Family harness: R5/R6 complete over every star selection; R7 rows
//    agree engine-vs-oracle, discrepancies flagged exactly when the stated
//    incompleteness is contradicted, and every n=2 instance is incomplete.
void criterion7(checker& check) {
  const std::vector<regression_row> rows = family_regression(g_budget);
  for (const regression_row& row : rows) {
    check.expect(row.agree, family_name(row.spec.family) + ": engine/oracle split");
    const bool contradicted = row.engine == completeness::complete &&
                              row.claimed == completeness::incomplete;
    if (row.spec.family == family_id::r5 || row.spec.family == family_id::r6)
      check.expect(row.engine == completeness::complete,
                   family_name(row.spec.family) + " instance not complete");
    if (row.spec.family == family_id::r7) {
      check.expect(row.discrepancy == contradicted, "R7 discrepancy flag wrong");
      if (row.spec.n == 2)
        check.expect(row.engine == completeness::incomplete, "R7 n=2 instance not incomplete");
    }
    const truth_table table = build_family(row.spec, g_two);
    const operator_set set(g_two, {{family_name(row.spec.family), table}});
    g_audits.push_back({set, decide_complete(set, g_budget)});
  }
}

// 8. Multi-valued checks (m=3): {neg, max} complete with a verified NOR
//    witness, {max, min} incomplete with an exhausted-closure certificate,
//    closure sizes reported deterministically.
void criterion8(checker& check) {
  const domain three(3);
  const operator_set negmax(three, {{"neg", neg_table(three)}, {"max", max_table(three, 2)}});
  const verdict complete_v = decide_complete(negmax, g_budget);
  check.expect(complete_v.status == completeness::complete, "{neg,max} not complete at m=3");
  check.expect(complete_v.sheffer.has_value() &&
                   complete_v.sheffer->kind == sheffer_kind::nor &&
                   table_of_term(complete_v.sheffer->expr, negmax, 2) == nor_table(three, 2),
               "{neg,max} witness is not a verified nor");
  g_audits.push_back({negmax, complete_v});

  const operator_set maxmin(three, {{"max", max_table(three, 2)}, {"min", min_table(three, 2)}});
  const verdict incomplete_v = decide_complete(maxmin, g_budget);
  check.expect(incomplete_v.status == completeness::incomplete, "{max,min} not incomplete");
  check.expect(incomplete_v.certificate.has_value() &&
                   incomplete_v.certificate->find("closure exhausted") != std::string::npos,
               "{max,min} lacks the exhausted-closure certificate");
  g_audits.push_back({maxmin, incomplete_v});

  const closure_result run1 = binary_closure(maxmin, g_budget);
  const closure_result run2 = binary_closure(maxmin, g_budget);
  check.expect(run1.stats == run2.stats && run1.reached == run2.reached,
               "{max,min} closure sizes not deterministic");
}

// 9. Soundness audits over every verdict collected above: Complete verdicts
//    re-verify all three witnesses pointwise; Incomplete verdicts re-verify
//    the closure as a fixpoint without either composite.
void criterion9(checker& check) {
  long complete_audited = 0;
  long incomplete_audited = 0;
  for (const audit_entry& entry : g_audits) {
    const domain dom = entry.set.dom();
    if (entry.v.status == completeness::complete) {
      ++complete_audited;
      const bool have = entry.v.sheffer.has_value() && entry.v.neg_witness.has_value() &&
                        entry.v.or_witness.has_value();
      check.expect(have, "complete verdict missing witnesses");
      if (!have)
        continue;
      const truth_table target = entry.v.sheffer->kind == sheffer_kind::nor
                                     ? nor_table(dom, 2)
                                     : nand_table(dom, 2);
      check.expect(table_of_term(entry.v.sheffer->expr, entry.set, 2) == target,
                   "sheffer witness fails re-verification");
      check.expect(table_of_term(*entry.v.neg_witness, entry.set, 1) == neg_table(dom),
                   "neg witness fails re-verification");
      check.expect(table_of_term(*entry.v.or_witness, entry.set, 2) == max_table(dom, 2),
                   "or witness fails re-verification");
    } else if (entry.v.status == completeness::incomplete) {
      ++incomplete_audited;
      const closure_result closure = binary_closure(entry.set, g_budget);
      check.expect(closure.exhausted && verify_fixpoint(entry.set, closure),
                   "incomplete verdict's closure is not a fixpoint");
      check.expect(!closure.contains(nor_table(dom, 2)) && !closure.contains(nand_table(dom, 2)),
                   "incomplete verdict's closure contains a composite");
    } else {
      check.expect(false, "inconclusive verdict reached the audit set");
    }
  }
  check.expect(complete_audited + incomplete_audited == static_cast<long>(g_audits.size()),
               "audit coverage gap");
  std::printf("         audited %ld complete and %ld incomplete verdicts\n", complete_audited,
              incomplete_audited);
}

// 10. Determinism: the criterion-1 sweep, run twice through the CLI, yields
//     byte-identical machine reports in the digest-stable section.
void criterion10(checker& check) {
  auto run_survey = [] {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"survey", "--format", "machine"}, out, err);
    return std::pair<int, std::string>(code, out.str());
  };
  const auto [code1, out1] = run_survey();
  const auto [code2, out2] = run_survey();
  check.expect(code1 == 0 && code2 == 0, "survey exited nonzero");
  const std::string stable1 = stable_section(report_doc::parse(out1)).dump(2);
  const std::string stable2 = stable_section(report_doc::parse(out2)).dump(2);
  check.expect(!stable1.empty() && stable1 == stable2,
               "stable report sections differ between runs");
}

} // namespace

int main() {
  struct criterion {
    int number;
    const char* title;
    std::function<void(checker&)> run;
  };
  const std::vector<criterion> criteria = {
      {1, "agreement sweep over all m=2 singletons and pairs", criterion1},
      {2, "Sheffer census: exactly NOR and NAND among binary singletons", criterion2},
      {3, "unique modification operator equals level reversal, m=2..7", criterion3},
      {4, "modification bijection/reversal properties and composite checks", criterion4},
      {5, "n-ary choice/modification reconstruction from nor2 and nand2", criterion5},
      {6, "R1-R4 instances complete with oracle confirmation", criterion6},
      {7, "R5-R7 harness: agreement, flags, n=2 incompleteness", criterion7},
      {8, "three-valued verdicts with verified witness and certificate", criterion8},
      {9, "soundness audits over every collected verdict", criterion9},
      {10, "byte-identical machine reports across repeated sweeps", criterion10},
  };

  int failed = 0;
  for (const criterion& c : criteria) {
    checker check;
    const auto start = std::chrono::steady_clock::now();
    c.run(check);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    const bool ok = check.failures == 0;
    std::printf("[%s] criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", c.number, c.title,
                ms);
    if (!ok) {
      std::printf("         %d failed expectation(s): %s\n", check.failures,
                  check.detail.c_str());
      ++failed;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
