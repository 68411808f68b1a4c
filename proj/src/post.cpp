#include "fcomp/post.hpp"

#include <bit>

namespace fcomp {

namespace {

void require_boolean(const truth_table& table) {
  if (table.dom().levels() != 2)
    throw error(errc::domain_not_boolean, "Post's criterion is defined for m=2");
}

} // namespace

post_classes class_membership(const truth_table& table) {
  require_boolean(table);
  const auto& f = table.values();
  const auto n = static_cast<std::size_t>(table.arity());
  const std::size_t rows = f.size();

  post_classes c;
  c.preserves0 = f.front() == 0;
  c.preserves1 = f.back() == 1;

  // Monotone: flipping any single argument 0 -> 1 never decreases the value.
  // Argument j occupies bit n-1-j of the row index (argument-major order).
  c.monotone = true;
  for (std::size_t p = 0; p < rows && c.monotone; ++p)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t bit = std::size_t{1} << (n - 1 - j);
      if ((p & bit) == 0 && f[p] > f[p | bit]) {
        c.monotone = false;
        break;
      }
    }

  c.self_dual = true;
  for (std::size_t p = 0; p < rows; ++p)
    if (f[rows - 1 - p] != 1 - f[p]) { // complement tuple flips every bit
      c.self_dual = false;
      break;
    }

  c.affine = true;
  const std::vector<level_t> coeffs = anf(table);
  for (std::size_t p = 0; p < coeffs.size(); ++p)
    if (coeffs[p] != 0 && std::popcount(p) >= 2) {
      c.affine = false;
      break;
    }

  return c;
}

std::vector<level_t> anf(const truth_table& table) {
  require_boolean(table);
  // Moebius transform over GF(2), butterfly per variable bit.
  std::vector<level_t> coeffs = table.values();
  for (std::size_t bit = 1; bit < coeffs.size(); bit <<= 1)
    for (std::size_t p = 0; p < coeffs.size(); ++p)
      if (p & bit)
        coeffs[p] = static_cast<level_t>(coeffs[p] ^ coeffs[p ^ bit]);
  return coeffs;
}

truth_table table_of_anf(const domain& dom, int arity, const std::vector<level_t>& coeffs) {
  if (dom.levels() != 2)
    throw error(errc::domain_not_boolean, "ANF is defined for m=2");
  // The transform is an involution, so evaluation is the same butterfly.
  std::vector<level_t> values = coeffs;
  for (std::size_t bit = 1; bit < values.size(); bit <<= 1)
    for (std::size_t p = 0; p < values.size(); ++p)
      if (p & bit)
        values[p] = static_cast<level_t>(values[p] ^ values[p ^ bit]);
  return truth_table(dom, arity, std::move(values));
}

post_result post_complete(const operator_set& set) {
  if (set.dom().levels() != 2)
    throw error(errc::domain_not_boolean, "Post's criterion is defined for m=2");

  post_result result;
  for (const named_table& op : set.ops())
    result.matrix.emplace_back(op.name, class_membership(op.table));

  for (std::size_t cls = 0; cls < post_class_names.size(); ++cls) {
    for (const auto& [name, membership] : result.matrix) {
      const bool in_class = cls == 0   ? membership.preserves0
                            : cls == 1 ? membership.preserves1
                            : cls == 2 ? membership.monotone
                            : cls == 3 ? membership.self_dual
                                       : membership.affine;
      if (!in_class) {
        result.escaper[cls] = name;
        break;
      }
    }
    if (!result.escaper[cls].has_value())
      result.violated.emplace_back(post_class_names[cls]);
  }
  result.complete = result.violated.empty();
  return result;
}

} // namespace fcomp
