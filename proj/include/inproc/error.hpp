#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inproc {

enum class Errc {
  empty_text,
  empty_sentence,
  index_out_of_range,
  parse_error,
  unknown_category,
  duplicate_entry,
  unknown_entity,
  unknown_action,
  no_interpretation,
  unrecognized_template,
  io_error,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  // 1-based line of the offending input row; 0 when not tied to a file line.
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace inproc
