#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace posetops {

enum class Errc {
  duplicate_name,
  unknown_name,
  cycle_detected,
  not_a_poset,
  not_bounded,
  invalid_complement,
  not_boolean,
  empty_argument,
  size_too_large,
  axioms_fail,
  consistency_fail,
  kind_mismatch,
  missing_complement,
  parse_error,
};

// Every failure the library reports deliberately. Anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code);

}  // namespace posetops
