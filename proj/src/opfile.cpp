#include "fcomp/opfile.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace fcomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

long parse_int(std::string_view token, int line, std::string_view what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw error(errc::parse_error, "line " + std::to_string(line) + ": bad " +
                                       std::string(what) + " '" + std::string(token) + "'");
  return value;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token)
    tokens.push_back(token);
  return tokens;
}

} // namespace

operator_set parse_operator_file(std::string_view text) {
  std::optional<domain> dom;
  std::vector<named_table> ops;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;

    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens[0] == "domain") {
      if (dom.has_value())
        throw error(errc::parse_error,
                    "line " + std::to_string(line_no) + ": duplicate domain declaration");
      if (!ops.empty() || tokens.size() != 2)
        throw error(errc::parse_error, "line " + std::to_string(line_no) +
                                           ": expected 'domain <m>' before any operators");
      const long m = parse_int(tokens[1], line_no, "domain size");
      if (m < 2 || m > 256)
        throw error(errc::parse_error, "line " + std::to_string(line_no) +
                                           ": domain size must be in [2, 256]");
      dom = domain(static_cast<int>(m));
      continue;
    }

    if (tokens[0] != "op")
      throw error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected 'domain', 'op' or a comment");
    if (!dom.has_value())
      throw error(errc::missing_domain, "line " + std::to_string(line_no) +
                                            ": operator declared before the domain line");
    if (tokens.size() < 4 || tokens[3] != ":")
      throw error(errc::parse_error, "line " + std::to_string(line_no) +
                                         ": expected 'op <name> <arity> : <values>'");
    const std::string& name = tokens[1];
    if (!valid_name(name))
      throw error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": bad operator name '" + name + "'");
    for (const named_table& existing : ops)
      if (existing.name == name)
        throw error(errc::duplicate_name,
                    "line " + std::to_string(line_no) + ": operator '" + name + "' redeclared");
    const long arity = parse_int(tokens[2], line_no, "arity");
    if (arity < 1)
      throw error(errc::bad_arity, "line " + std::to_string(line_no) +
                                       ": arity must be >= 1 (constants are rejected)");

    std::vector<level_t> values;
    values.reserve(tokens.size() - 4);
    for (std::size_t i = 4; i < tokens.size(); ++i) {
      const long v = parse_int(tokens[i], line_no, "level code");
      if (v < 0 || v >= dom->levels())
        throw error(errc::level_out_of_range, "line " + std::to_string(line_no) + ": level " +
                                                  std::to_string(v) + " outside [0, " +
                                                  std::to_string(dom->levels()) + ")");
      values.push_back(static_cast<level_t>(v));
    }
    if (values.size() != table_size(*dom, static_cast<int>(arity)))
      throw error(errc::length_mismatch,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table_size(*dom, static_cast<int>(arity))) +
                      " values, got " + std::to_string(values.size()));
    ops.push_back({name, truth_table(*dom, static_cast<int>(arity), std::move(values))});
  }

  if (!dom.has_value())
    throw error(errc::missing_domain, "no domain declaration");
  if (ops.empty())
    throw error(errc::parse_error, "no operator declarations");
  return operator_set(*dom, std::move(ops));
}

std::string render_operator_file(const operator_set& set) {
  std::string out = "domain " + std::to_string(set.dom().levels()) + "\n";
  for (const named_table& op : set.ops()) {
    out += "op " + op.name + " " + std::to_string(op.table.arity()) + " :";
    for (level_t v : op.table.values())
      out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

} // namespace fcomp
