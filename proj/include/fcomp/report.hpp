#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fcomp/closure.hpp"
#include "fcomp/post.hpp"
#include "fcomp/tables.hpp"

namespace fcomp {

inline constexpr std::string_view tool_name = "fcomp";
inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr int report_schema_version = 1;

// Machine reports are single JSON documents with insertion-ordered keys.
// Everything except the trailing "timing" object is digest-stable: byte
// identical across runs for identical input and flags.
using report_doc = nlohmann::ordered_json;

/// 64-bit FNV-1a, printed as 16 hex digits. Input fingerprint, not crypto.
std::string fnv1a64_hex(std::string_view bytes);

/// Common header: tool block plus an input block with the given digest.
report_doc report_header(std::string_view command, std::string_view input_digest);

report_doc verdict_to_json(const verdict& v);
report_doc post_to_json(const post_result& oracle);

/// Adds the trailing timing block (excluded from the digest-stable section).
void finish_report(report_doc& doc, double elapsed_ms);

/// The digest-stable section: the document without "timing".
report_doc stable_section(report_doc doc);

/// Human-readable rendering derived from the machine document.
std::string render_text(const report_doc& doc);

} // namespace fcomp
