#pragma once

#include <stdexcept>
#include <string>

namespace oriclique {

// Failure categories surfaced by the library. The CLI maps input/format
// problems to exit 2 and domain verdict failures to exit 1.
enum class errc {
  self_loop,
  antisymmetry,
  duplicate_arc,
  out_of_range,
  missing_arc,
  capacity,
  empty_graph,
  not_a_clique,
  bad_partition,
  not_extending,
  no_such_order,
  even_order,
  bad_connection_set,
  bad_format,
  bad_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace oriclique
