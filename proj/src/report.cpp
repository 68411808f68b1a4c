#include "fcomp/report.hpp"

#include <cstdint>

namespace fcomp {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

report_doc report_header(std::string_view command, std::string_view input_digest) {
  report_doc doc;
  doc["tool"] = {{"name", tool_name}, {"version", tool_version},
                 {"schema", report_schema_version}, {"command", command}};
  doc["input"] = {{"digest", input_digest}};
  return doc;
}

report_doc verdict_to_json(const verdict& v) {
  report_doc out;
  out["status"] = to_string(v.status);
  // Completeness is decided against the basis {neg, max}: level reversal and
  // level max. For m=2 this coincides with classical completeness.
  out["completeness_target"] = "representable {neg, max} (level reversal, level max)";
  if (v.sheffer.has_value()) {
    out["sheffer"] = {{"kind", to_string(v.sheffer->kind)},
                      {"term", v.sheffer->expr.to_string()}};
  }
  if (v.neg_witness.has_value())
    out["neg"] = v.neg_witness->to_string();
  if (v.or_witness.has_value())
    out["or"] = v.or_witness->to_string();
  if (v.certificate.has_value())
    out["certificate"] = *v.certificate;
  out["closure"] = {{"iterations", v.stats.iterations},
                    {"tables_generated", v.stats.tables_generated},
                    {"tables_reached", v.stats.budget_used}};
  out["budget"] = {{"max_tables", v.limits.max_tables},
                   {"max_iterations", v.limits.max_iterations}};
  return out;
}

report_doc post_to_json(const post_result& oracle) {
  report_doc out;
  out["complete"] = oracle.complete;
  report_doc matrix = report_doc::array();
  for (const auto& [name, classes] : oracle.matrix) {
    matrix.push_back({{"op", name},
                      {"preserves0", classes.preserves0},
                      {"preserves1", classes.preserves1},
                      {"monotone", classes.monotone},
                      {"self_dual", classes.self_dual},
                      {"affine", classes.affine}});
  }
  out["matrix"] = std::move(matrix);
  report_doc escapers;
  for (std::size_t cls = 0; cls < post_class_names.size(); ++cls)
    if (oracle.escaper[cls].has_value())
      escapers[std::string(post_class_names[cls])] = *oracle.escaper[cls];
  out["escapers"] = std::move(escapers);
  if (!oracle.violated.empty())
    out["violated_classes"] = oracle.violated;
  return out;
}

void finish_report(report_doc& doc, double elapsed_ms) {
  doc["timing"] = {{"milliseconds", elapsed_ms}};
}

report_doc stable_section(report_doc doc) {
  doc.erase("timing");
  return doc;
}

namespace {

void render_node(const report_doc& node, int indent, std::string& out);

void render_scalar(const report_doc& node, std::string& out) {
  if (node.is_string())
    out += node.get<std::string>();
  else
    out += node.dump();
}

bool all_scalar(const report_doc& array) {
  for (const auto& item : array)
    if (item.is_object() || item.is_array())
      return false;
  return true;
}

void render_node(const report_doc& node, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      out += pad + key + ":\n";
      render_node(value, indent + 2, out);
    } else if (value.is_array() && !all_scalar(value)) {
      out += pad + key + ":\n";
      for (const auto& item : value) {
        std::string row;
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          if (!first)
            row += "  ";
          first = false;
          row += k + "=";
          render_scalar(v, row);
        }
        out += pad + "  - " + row + "\n";
      }
    } else if (value.is_array()) {
      out += pad + key + ": [";
      bool first = true;
      for (const auto& item : value) {
        if (!first)
          out += ", ";
        first = false;
        render_scalar(item, out);
      }
      out += "]\n";
    } else {
      out += pad + key + ": ";
      render_scalar(value, out);
      out += "\n";
    }
  }
}

} // namespace

std::string render_text(const report_doc& doc) {
  std::string out;
  render_node(doc, 0, out);
  return out;
}

} // namespace fcomp
