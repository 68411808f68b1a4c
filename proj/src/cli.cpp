#include "fcomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcomp/abstract_ops.hpp"
#include "fcomp/closure.hpp"
#include "fcomp/families.hpp"
#include "fcomp/opfile.hpp"
#include "fcomp/post.hpp"
#include "fcomp/report.hpp"
#include "fcomp/tables.hpp"

namespace fcomp::cli {

namespace {

struct noinput_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct common_flags {
  long budget_tables = 200000;
  int budget_iters = 64;
  std::string format = "text";
};

void add_budget_flags(CLI::App* cmd, common_flags& flags) {
  cmd->add_option("--budget-tables", flags.budget_tables, "closure size budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-iters", flags.budget_iters, "closure iteration budget")
      ->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App* cmd, common_flags& flags) {
  cmd->add_option("--format", flags.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw noinput_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class timer {
public:
  double elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const report_doc& doc, const common_flags& flags, std::ostream& out) {
  if (flags.format == "machine")
    out << doc.dump(2) << "\n";
  else
    out << render_text(doc);
}

int status_exit(completeness status) {
  switch (status) {
  case completeness::complete: return exit_complete;
  case completeness::incomplete: return exit_incomplete;
  case completeness::inconclusive: return exit_inconclusive;
  }
  return exit_internal;
}

std::string values_string(const truth_table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.values().size(); ++i) {
    if (i > 0)
      out += ' ';
    out += std::to_string(table.values()[i]);
  }
  return out;
}

report_doc file_input_block(const operator_set& set) {
  report_doc input;
  input["digest"] = fnv1a64_hex(render_operator_file(set));
  input["domain"] = set.dom().levels();
  report_doc names = report_doc::array();
  for (const named_table& op : set.ops())
    names.push_back(op.name);
  input["operators"] = std::move(names);
  return input;
}

bool engine_oracle_agree(completeness engine, bool oracle_complete) {
  return engine != completeness::inconclusive &&
         (engine == completeness::complete) == oracle_complete;
}

int run_check(const std::string& path, const common_flags& flags, std::ostream& out) {
  const operator_set set = parse_operator_file(read_file(path));
  const budget limits{flags.budget_tables, flags.budget_iters};
  timer clock;
  const verdict v = decide_complete(set, limits);
  report_doc doc = report_header("check", fnv1a64_hex(render_operator_file(set)));
  doc["input"] = file_input_block(set);
  doc["verdict"] = verdict_to_json(v);
  finish_report(doc, clock.elapsed_ms());
  emit(doc, flags, out);
  return status_exit(v.status);
}

int run_oracle(const std::string& path, const common_flags& flags, std::ostream& out) {
  const operator_set set = parse_operator_file(read_file(path));
  timer clock;
  const post_result oracle = post_complete(set);
  report_doc doc = report_header("oracle", fnv1a64_hex(render_operator_file(set)));
  doc["input"] = file_input_block(set);
  doc["oracle"] = post_to_json(oracle);
  finish_report(doc, clock.elapsed_ms());
  emit(doc, flags, out);
  return oracle.complete ? exit_complete : exit_incomplete;
}

int run_compare(const std::string& path, const common_flags& flags, std::ostream& out) {
  const operator_set set = parse_operator_file(read_file(path));
  const budget limits{flags.budget_tables, flags.budget_iters};
  timer clock;
  const verdict v = decide_complete(set, limits);
  const post_result oracle = post_complete(set);
  report_doc doc = report_header("compare", fnv1a64_hex(render_operator_file(set)));
  doc["input"] = file_input_block(set);
  doc["verdict"] = verdict_to_json(v);
  doc["oracle"] = post_to_json(oracle);
  doc["agreement"] = engine_oracle_agree(v.status, oracle.complete);
  finish_report(doc, clock.elapsed_ms());
  emit(doc, flags, out);
  return status_exit(v.status);
}

int run_closure_cmd(const std::string& path, const common_flags& flags, std::ostream& out) {
  const operator_set set = parse_operator_file(read_file(path));
  const budget limits{flags.budget_tables, flags.budget_iters};
  timer clock;
  const closure_result closure = binary_closure(set, limits);
  report_doc doc = report_header("closure", fnv1a64_hex(render_operator_file(set)));
  doc["input"] = file_input_block(set);
  report_doc listing = report_doc::array();
  for (std::size_t i = 0; i < closure.reached.size(); ++i) {
    listing.push_back({{"index", i},
                       {"values", values_string(closure.reached[i])},
                       {"witness", closure.witnesses[i].to_string()},
                       {"depth", closure.witnesses[i].depth()}});
  }
  doc["closure"] = {{"exhausted", closure.exhausted},
                    {"iterations", closure.stats.iterations},
                    {"tables_generated", closure.stats.tables_generated},
                    {"tables_reached", closure.stats.budget_used},
                    {"tables", std::move(listing)}};
  finish_report(doc, clock.elapsed_ms());
  emit(doc, flags, out);
  return 0;
}

struct family_flags {
  std::string family;
  int n = 2;
  int m = 2;
  std::string stars;
  std::string lozenges;
};

family_id parse_family(const std::string& name) {
  for (int i = 0; i < 7; ++i)
    if (name == "r" + std::to_string(i + 1) || name == "R" + std::to_string(i + 1))
      return static_cast<family_id>(i);
  throw error(errc::spec_invalid, "unknown family '" + name + "' (expected r1..r7)");
}

std::vector<std::string> split_commas(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    out.push_back(item);
  return out;
}

std::vector<star_op> parse_stars(const std::string& list) {
  std::vector<star_op> out;
  for (const std::string& item : split_commas(list)) {
    if (item == "or")
      out.push_back(star_op::or_op);
    else if (item == "and")
      out.push_back(star_op::and_op);
    else
      throw error(errc::spec_invalid, "bad star '" + item + "' (expected or|and)");
  }
  return out;
}

std::vector<lozenge_op> parse_lozenges(const std::string& list) {
  std::vector<lozenge_op> out;
  for (const std::string& item : split_commas(list)) {
    if (item == "neg")
      out.push_back(lozenge_op::neg);
    else if (item == "negneg")
      out.push_back(lozenge_op::negneg);
    else
      throw error(errc::spec_invalid, "bad lozenge '" + item + "' (expected neg|negneg)");
  }
  return out;
}

int run_family(const family_flags& flags, std::ostream& out) {
  family_spec spec;
  spec.family = parse_family(flags.family);
  spec.n = flags.n;
  spec.stars = parse_stars(flags.stars);
  spec.lozenges = parse_lozenges(flags.lozenges);
  const domain dom(flags.m);
  const truth_table table = build_family(spec, dom);
  out << render_operator_file(operator_set(dom, {{family_name(spec.family), table}}));
  return 0;
}

struct survey_flags {
  int m = 2;
  int max_arity = 2;
  int max_size = 2;
};

// All unary and binary two-valued tables, named by their value rows
// (u01 is the unary [0,1], b1000 is the binary [1,0,0,0]).
std::vector<named_table> survey_tables(const domain& dom, int max_arity) {
  std::vector<named_table> out;
  for (int arity = 1; arity <= max_arity; ++arity) {
    const std::size_t cells = table_size(dom, arity);
    std::vector<level_t> values(cells, 0);
    for (;;) {
      std::string name(arity == 1 ? "u" : "b");
      for (level_t v : values)
        name += std::to_string(v);
      out.push_back({name, truth_table(dom, arity, values)});
      if (!next_tuple(dom, std::span<level_t>(values)))
        break;
    }
  }
  return out;
}

int run_survey(const survey_flags& flags, const common_flags& common, std::ostream& out) {
  if (flags.m != 2 || flags.max_arity > 2 || flags.max_size > 2)
    throw error(errc::cap_exceeded,
                "survey supports m=2, arity <= 2, set size <= 2");
  const domain dom(2);
  const budget limits{common.budget_tables, common.budget_iters};
  const std::vector<named_table> tables = survey_tables(dom, flags.max_arity);

  std::vector<std::vector<named_table>> sets;
  for (const named_table& t : tables)
    sets.push_back({t});
  if (flags.max_size >= 2)
    for (std::size_t i = 0; i < tables.size(); ++i)
      for (std::size_t j = i + 1; j < tables.size(); ++j)
        sets.push_back({tables[i], tables[j]});

  timer clock;
  long engine_complete = 0;
  long oracle_complete = 0;
  long agreement = 0;
  long inconclusive = 0;
  report_doc rows = report_doc::array();
  report_doc complete_singletons = report_doc::array();
  for (const auto& members : sets) {
    const operator_set set(dom, members);
    const verdict v = decide_complete(set, limits);
    const post_result oracle = post_complete(set);
    const bool agree = engine_oracle_agree(v.status, oracle.complete);
    engine_complete += v.status == completeness::complete ? 1 : 0;
    oracle_complete += oracle.complete ? 1 : 0;
    agreement += agree ? 1 : 0;
    inconclusive += v.status == completeness::inconclusive ? 1 : 0;
    if (members.size() == 1 && v.status == completeness::complete)
      complete_singletons.push_back(members[0].name);
    report_doc names = report_doc::array();
    for (const named_table& t : members)
      names.push_back(t.name);
    rows.push_back({{"ops", std::move(names)},
                    {"engine", to_string(v.status)},
                    {"oracle", oracle.complete ? "complete" : "incomplete"},
                    {"agree", agree}});
  }

  std::string params = "survey m=" + std::to_string(flags.m) +
                       " max_arity=" + std::to_string(flags.max_arity) +
                       " max_size=" + std::to_string(flags.max_size);
  report_doc doc = report_header("survey", fnv1a64_hex(params));
  doc["input"]["m"] = flags.m;
  doc["input"]["max_arity"] = flags.max_arity;
  doc["input"]["max_size"] = flags.max_size;
  const long total = static_cast<long>(sets.size());
  doc["survey"] = {{"sets", total},
                   {"singletons", tables.size()},
                   {"pairs", total - static_cast<long>(tables.size())},
                   {"engine_complete", engine_complete},
                   {"oracle_complete", oracle_complete},
                   {"agreement", agreement},
                   {"inconclusive", inconclusive},
                   {"complete_singletons", std::move(complete_singletons)},
                   {"rows", std::move(rows)}};
  finish_report(doc, clock.elapsed_ms());
  emit(doc, common, out);
  return agreement == total && inconclusive == 0 ? 0 : 1;
}

struct modops_flags {
  int m = 2;
  std::string order = "geq";
  int cap = 8;
};

int run_modops(const modops_flags& flags, const common_flags& common, std::ostream& out) {
  const domain dom(flags.m);
  const order_spec order = flags.order == "geq" ? order_spec::geq(dom) : order_spec::leq(dom);
  timer clock;
  const std::vector<truth_table> found = enumerate_modifications(dom, order, flags.cap);
  std::string params = "modops m=" + std::to_string(flags.m) + " order=" + flags.order;
  report_doc doc = report_header("modops", fnv1a64_hex(params));
  doc["input"]["m"] = flags.m;
  doc["input"]["order"] = flags.order;
  report_doc listing = report_doc::array();
  for (const truth_table& t : found)
    listing.push_back(values_string(t));
  doc["modops"] = {{"candidates_scanned", table_size(dom, flags.m)},
                   {"count", found.size()},
                   {"tables", std::move(listing)}};
  finish_report(doc, clock.elapsed_ms());
  emit(doc, common, out);
  return 0;
}

int run_regression(const common_flags& common, std::ostream& out) {
  const budget limits{common.budget_tables, common.budget_iters};
  timer clock;
  const std::vector<regression_row> rows = family_regression(limits);

  long splits = 0;
  long discrepancies = 0;
  report_doc listing = report_doc::array();
  for (const regression_row& row : rows) {
    splits += row.agree ? 0 : 1;
    discrepancies += row.discrepancy ? 1 : 0;
    std::string stars;
    for (std::size_t i = 0; i < row.spec.stars.size(); ++i)
      stars += std::string(i > 0 ? "," : "") + std::string(to_string(row.spec.stars[i]));
    std::string lozenges;
    for (std::size_t i = 0; i < row.spec.lozenges.size(); ++i)
      lozenges += std::string(i > 0 ? "," : "") + std::string(to_string(row.spec.lozenges[i]));
    listing.push_back({{"family", family_name(row.spec.family)},
                       {"n", row.spec.n},
                       {"stars", stars},
                       {"lozenges", lozenges},
                       {"claimed", to_string(row.claimed)},
                       {"engine", to_string(row.engine)},
                       {"oracle", row.oracle_complete ? "complete" : "incomplete"},
                       {"agree", row.agree},
                       {"discrepancy", row.discrepancy}});
  }

  report_doc doc = report_header("regression", fnv1a64_hex("regression m=2"));
  doc["regression"] = {{"instances", rows.size()},
                       {"engine_oracle_splits", splits},
                       {"claim_discrepancies", discrepancies},
                       {"rows", std::move(listing)}};
  finish_report(doc, clock.elapsed_ms());
  emit(doc, common, out);
  return splits == 0 ? 0 : 1;
}

int exit_code_for(const error& e) {
  switch (e.code()) {
  case errc::spec_invalid:
  case errc::cap_exceeded:
  case errc::precondition_failed:
    return exit_usage;
  case errc::witness_invalid:
  case errc::not_complete:
  case errc::inconclusive_subset:
    return exit_internal;
  default:
    return exit_data;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decides functional completeness of finite-valued operator sets"};
  app.set_version_flag("--version", std::string(tool_name) + " " + std::string(tool_version));
  app.require_subcommand(1);

  common_flags common;

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "decide completeness of an operator file");
  check->add_option("file", check_path, "operator file")->required();
  add_budget_flags(check, common);
  add_format_flag(check, common);

  std::string oracle_path;
  CLI::App* oracle = app.add_subcommand("oracle", "Post's five-class criterion (m=2)");
  oracle->add_option("file", oracle_path, "operator file")->required();
  add_format_flag(oracle, common);

  std::string compare_path;
  CLI::App* compare = app.add_subcommand("compare", "run engine and oracle, report agreement");
  compare->add_option("file", compare_path, "operator file")->required();
  add_budget_flags(compare, common);
  add_format_flag(compare, common);

  std::string closure_path;
  CLI::App* closure = app.add_subcommand("closure", "dump the reached binary tables");
  closure->add_option("file", closure_path, "operator file")->required();
  add_budget_flags(closure, common);
  add_format_flag(closure, common);

  family_flags family;
  CLI::App* family_cmd = app.add_subcommand("family", "emit an operator file for R1..R7");
  family_cmd->add_option("--family", family.family, "family id (r1..r7)")->required();
  family_cmd->add_option("--n", family.n, "arity")->check(CLI::PositiveNumber);
  family_cmd->add_option("--m", family.m, "truth levels")->check(CLI::PositiveNumber);
  family_cmd->add_option("--stars", family.stars, "comma list of or|and (R5..R7)");
  family_cmd->add_option("--lozenges", family.lozenges, "comma list of neg|negneg (R7)");

  survey_flags survey;
  CLI::App* survey_cmd = app.add_subcommand("survey", "engine/oracle agreement sweep (m=2)");
  survey_cmd->add_option("--m", survey.m, "truth levels (must be 2)");
  survey_cmd->add_option("--max-arity", survey.max_arity, "largest operator arity");
  survey_cmd->add_option("--max-size", survey.max_size, "largest set size");
  add_budget_flags(survey_cmd, common);
  add_format_flag(survey_cmd, common);

  modops_flags modops;
  CLI::App* modops_cmd = app.add_subcommand("modops", "enumerate modification operators");
  modops_cmd->add_option("--m", modops.m, "truth levels")->required();
  modops_cmd->add_option("--order", modops.order, "total order")
      ->check(CLI::IsMember({"geq", "leq"}));
  modops_cmd->add_option("--cap", modops.cap, "largest m to scan");
  add_format_flag(modops_cmd, common);

  CLI::App* regression_cmd = app.add_subcommand("regression", "R1..R7 three-way report (m=2)");
  add_budget_flags(regression_cmd, common);
  add_format_flag(regression_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (check->parsed())
      return run_check(check_path, common, out);
    if (oracle->parsed())
      return run_oracle(oracle_path, common, out);
    if (compare->parsed())
      return run_compare(compare_path, common, out);
    if (closure->parsed())
      return run_closure_cmd(closure_path, common, out);
    if (family_cmd->parsed())
      return run_family(family, out);
    if (survey_cmd->parsed())
      return run_survey(survey, common, out);
    if (modops_cmd->parsed())
      return run_modops(modops, common, out);
    if (regression_cmd->parsed())
      return run_regression(common, out);
    err << "no subcommand selected\n";
    return exit_usage;
  } catch (const noinput_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_noinput;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

} // namespace fcomp::cli
