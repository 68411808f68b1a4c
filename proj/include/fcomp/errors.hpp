#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcomp {

/// Error categories raised by the library. Tests match on these codes.
enum class errc {
  bad_domain,
  bad_arity,
  length_mismatch,
  level_out_of_range,
  arity_mismatch,
  domain_mismatch,
  index_out_of_range,
  unknown_operator,
  empty_input,
  cap_exceeded,
  precondition_failed,
  not_complete,
  inconclusive_subset,
  witness_invalid,
  spec_invalid,
  parse_error,
  duplicate_name,
  missing_domain,
  domain_not_boolean,
};

std::string_view to_string(errc code) noexcept;

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace fcomp
