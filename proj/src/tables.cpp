#include "fcomp/tables.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace fcomp {

namespace {

// Keeps table allocations sane: 2^24 cells is far beyond anything the
// decision procedure enumerates.
constexpr std::size_t max_table_cells = std::size_t{1} << 24;

} // namespace

std::string_view to_string(errc code) noexcept {
  switch (code) {
  case errc::bad_domain: return "BadDomain";
  case errc::bad_arity: return "BadArity";
  case errc::length_mismatch: return "LengthMismatch";
  case errc::level_out_of_range: return "LevelOutOfRange";
  case errc::arity_mismatch: return "ArityMismatch";
  case errc::domain_mismatch: return "DomainMismatch";
  case errc::index_out_of_range: return "IndexOutOfRange";
  case errc::unknown_operator: return "UnknownOperator";
  case errc::empty_input: return "EmptyInput";
  case errc::cap_exceeded: return "CapExceeded";
  case errc::precondition_failed: return "PreconditionFailed";
  case errc::not_complete: return "NotComplete";
  case errc::inconclusive_subset: return "InconclusiveSubset";
  case errc::witness_invalid: return "WitnessInvalid";
  case errc::spec_invalid: return "SpecInvalid";
  case errc::parse_error: return "ParseError";
  case errc::duplicate_name: return "DuplicateName";
  case errc::missing_domain: return "MissingDomain";
  case errc::domain_not_boolean: return "DomainNotBoolean";
  }
  return "UnknownError";
}

domain::domain(int levels) : m_(levels) {
  if (levels < 2 || levels > 256)
    throw error(errc::bad_domain, "need 2 <= m <= 256, got " + std::to_string(levels));
  for (int i = 0; i < m_; ++i)
    assert(m_ - 1 - i >= 0 && m_ - 1 - i < m_); // chain closed under reversal
}

std::size_t table_size(const domain& dom, int arity) {
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= static_cast<std::size_t>(dom.levels());
    if (size > max_table_cells)
      throw error(errc::cap_exceeded, "table with m=" + std::to_string(dom.levels()) +
                                          ", arity=" + std::to_string(arity) + " is too large");
  }
  return size;
}

truth_table::truth_table(domain dom, int arity, std::vector<level_t> values)
    : dom_(dom), arity_(arity), values_(std::move(values)) {
  if (arity_ < 1)
    throw error(errc::bad_arity, "operator arity must be >= 1, got " + std::to_string(arity_));
  if (values_.size() != table_size(dom_, arity_))
    throw error(errc::length_mismatch, "expected " + std::to_string(table_size(dom_, arity_)) +
                                           " values, got " + std::to_string(values_.size()));
  for (level_t v : values_)
    if (v >= dom_.levels())
      throw error(errc::level_out_of_range,
                  "level " + std::to_string(v) + " >= m=" + std::to_string(dom_.levels()));
}

level_t truth_table::evaluate(std::span<const level_t> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw error(errc::arity_mismatch, "table of arity " + std::to_string(arity_) + " applied to " +
                                          std::to_string(args.size()) + " arguments");
  return values_[index_of_tuple(dom_, args)];
}

std::size_t index_of_tuple(const domain& dom, std::span<const level_t> args) {
  std::size_t index = 0;
  for (level_t a : args) {
    if (a >= dom.levels())
      throw error(errc::level_out_of_range,
                  "level " + std::to_string(a) + " >= m=" + std::to_string(dom.levels()));
    index = index * static_cast<std::size_t>(dom.levels()) + a;
  }
  return index;
}

void tuple_of_index(const domain& dom, std::size_t index, std::span<level_t> out) {
  const auto m = static_cast<std::size_t>(dom.levels());
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = static_cast<level_t>(index % m);
    index /= m;
  }
}

bool next_tuple(const domain& dom, std::span<level_t> args) noexcept {
  for (std::size_t j = args.size(); j-- > 0;) {
    if (++args[j] < dom.levels())
      return true;
    args[j] = 0;
  }
  return false;
}

term term::var(int index) {
  if (index < 0)
    throw error(errc::index_out_of_range, "negative variable index");
  term t;
  t.var_ = index;
  return t;
}

term term::apply(std::string op_name, std::vector<term> args) {
  if (op_name.empty())
    throw error(errc::unknown_operator, "empty operator name");
  term t;
  t.op_ = std::move(op_name);
  t.children_ = std::move(args);
  return t;
}

int term::var_index() const {
  if (!is_var())
    throw error(errc::precondition_failed, "var_index() on an application node");
  return var_;
}

const std::string& term::op_name() const {
  if (is_var())
    throw error(errc::precondition_failed, "op_name() on a variable leaf");
  return op_;
}

const std::vector<term>& term::args() const { return children_; }

int term::depth() const noexcept {
  int d = 0;
  for (const term& c : children_)
    d = std::max(d, c.depth());
  return is_var() ? 0 : d + 1;
}

int term::max_var_index() const noexcept {
  if (is_var())
    return var_;
  int best = -1;
  for (const term& c : children_)
    best = std::max(best, c.max_var_index());
  return best;
}

std::string term::to_string() const {
  if (is_var())
    return "x" + std::to_string(var_);
  std::string out = op_;
  out += '(';
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += children_[i].to_string();
  }
  out += ')';
  return out;
}

term substitute(const term& t, const std::vector<term>& replacements) {
  if (t.is_var()) {
    const auto i = static_cast<std::size_t>(t.var_index());
    if (i >= replacements.size())
      throw error(errc::index_out_of_range,
                  "no replacement for variable x" + std::to_string(t.var_index()));
    return replacements[i];
  }
  std::vector<term> children;
  children.reserve(t.args().size());
  for (const term& c : t.args())
    children.push_back(substitute(c, replacements));
  return term::apply(t.op_name(), std::move(children));
}

operator_set::operator_set(domain dom, std::vector<named_table> ops)
    : dom_(dom), ops_(std::move(ops)) {
  if (ops_.empty())
    throw error(errc::empty_input, "operator set needs at least one operator");
  for (const named_table& op : ops_) {
    if (op.name.empty())
      throw error(errc::parse_error, "operator with empty name");
    if (op.table.dom() != dom_)
      throw error(errc::domain_mismatch, "operator " + op.name + " has a different domain");
  }
  for (std::size_t i = 0; i < ops_.size(); ++i)
    for (std::size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].name == ops_[j].name)
        throw error(errc::duplicate_name, "operator " + ops_[i].name + " declared twice");
}

const truth_table* operator_set::find(std::string_view name) const noexcept {
  for (const named_table& op : ops_)
    if (op.name == name)
      return &op.table;
  return nullptr;
}

truth_table make_table(domain dom, int arity, std::vector<level_t> values) {
  return truth_table(dom, arity, std::move(values));
}

level_t eval_term(const term& t, const operator_set& set, std::span<const level_t> args) {
  for (level_t a : args)
    if (a >= set.dom().levels())
      throw error(errc::level_out_of_range,
                  "argument level " + std::to_string(a) + " >= m=" +
                      std::to_string(set.dom().levels()));
  if (t.is_var()) {
    const auto i = static_cast<std::size_t>(t.var_index());
    if (i >= args.size())
      throw error(errc::index_out_of_range,
                  "term uses x" + std::to_string(t.var_index()) + " but only " +
                      std::to_string(args.size()) + " arguments were given");
    return args[i];
  }
  const truth_table* table = set.find(t.op_name());
  if (table == nullptr)
    throw error(errc::unknown_operator, t.op_name());
  if (table->arity() != static_cast<int>(t.args().size()))
    throw error(errc::arity_mismatch, t.op_name() + " has arity " +
                                          std::to_string(table->arity()) + ", node has " +
                                          std::to_string(t.args().size()) + " children");
  std::vector<level_t> child_values(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i)
    child_values[i] = eval_term(t.args()[i], set, args);
  return table->evaluate(child_values);
}

truth_table table_of_term(const term& t, const operator_set& set, int var_count) {
  if (var_count < 1)
    throw error(errc::bad_arity, "var_count must be >= 1");
  if (t.max_var_index() >= var_count)
    throw error(errc::index_out_of_range, "term uses more variables than declared");
  const std::size_t size = table_size(set.dom(), var_count);
  std::vector<level_t> values(size);
  std::vector<level_t> args(static_cast<std::size_t>(var_count), 0);
  for (std::size_t p = 0; p < size; ++p) {
    values[p] = eval_term(t, set, args);
    next_tuple(set.dom(), args);
  }
  return truth_table(set.dom(), var_count, std::move(values));
}

truth_table compose(const truth_table& outer, const std::vector<truth_table>& inners,
                    int var_count) {
  if (static_cast<int>(inners.size()) != outer.arity())
    throw error(errc::arity_mismatch, "outer arity " + std::to_string(outer.arity()) +
                                          " but " + std::to_string(inners.size()) + " inners");
  for (const truth_table& g : inners) {
    if (g.dom() != outer.dom())
      throw error(errc::domain_mismatch, "inner table over a different domain");
    if (g.arity() != var_count)
      throw error(errc::arity_mismatch, "inner arity " + std::to_string(g.arity()) +
                                            " != var_count " + std::to_string(var_count));
  }
  const domain dom = outer.dom();
  const std::size_t size = table_size(dom, var_count);
  // Inner tables share the indexing scheme, so position p of the result
  // needs no tuple decoding: feed the inners' entries at p into the outer.
  std::vector<level_t> values(size);
  std::vector<level_t> point(inners.size());
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t j = 0; j < inners.size(); ++j)
      point[j] = inners[j].values()[p];
    values[p] = outer.values()[index_of_tuple(dom, point)];
  }
  return truth_table(dom, var_count, std::move(values));
}

truth_table projection(domain dom, int var_count, int i) {
  if (var_count < 1)
    throw error(errc::bad_arity, "var_count must be >= 1");
  if (i < 0 || i >= var_count)
    throw error(errc::index_out_of_range, "projection index " + std::to_string(i) +
                                              " outside [0, " + std::to_string(var_count) + ")");
  const std::size_t size = table_size(dom, var_count);
  std::vector<level_t> values(size);
  std::vector<level_t> args(static_cast<std::size_t>(var_count), 0);
  for (std::size_t p = 0; p < size; ++p) {
    values[p] = args[static_cast<std::size_t>(i)];
    next_tuple(dom, args);
  }
  return truth_table(dom, var_count, std::move(values));
}

truth_table neg_table(domain dom) {
  std::vector<level_t> values(static_cast<std::size_t>(dom.levels()));
  for (int i = 0; i < dom.levels(); ++i)
    values[static_cast<std::size_t>(i)] = dom.reversal(static_cast<level_t>(i));
  return truth_table(dom, 1, std::move(values));
}

namespace {

truth_table fold_table(domain dom, int arity, bool use_max) {
  if (arity < 2)
    throw error(errc::bad_arity, "choice-derived tables need arity >= 2");
  const std::size_t size = table_size(dom, arity);
  std::vector<level_t> values(size);
  std::vector<level_t> args(static_cast<std::size_t>(arity), 0);
  for (std::size_t p = 0; p < size; ++p) {
    level_t acc = args[0];
    for (int j = 1; j < arity; ++j)
      acc = use_max ? std::max(acc, args[static_cast<std::size_t>(j)])
                    : std::min(acc, args[static_cast<std::size_t>(j)]);
    values[p] = acc;
    next_tuple(dom, args);
  }
  return truth_table(dom, arity, std::move(values));
}

} // namespace

truth_table max_table(domain dom, int arity) { return fold_table(dom, arity, true); }

truth_table min_table(domain dom, int arity) { return fold_table(dom, arity, false); }

truth_table nor_table(domain dom, int arity) {
  return compose(neg_table(dom), {max_table(dom, arity)}, arity);
}

truth_table nand_table(domain dom, int arity) {
  return compose(neg_table(dom), {min_table(dom, arity)}, arity);
}

operator_set canonical_tables(domain dom, int n) {
  std::vector<named_table> ops;
  ops.push_back({"neg", neg_table(dom)});
  ops.push_back({"max2", max_table(dom, 2)});
  ops.push_back({"min2", min_table(dom, 2)});
  ops.push_back({"nor2", nor_table(dom, 2)});
  ops.push_back({"nand2", nand_table(dom, 2)});
  if (n > 2) {
    ops.push_back({"nor" + std::to_string(n), nor_table(dom, n)});
    ops.push_back({"nand" + std::to_string(n), nand_table(dom, n)});
  }
  return operator_set(dom, std::move(ops));
}

} // namespace fcomp
