#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quotcert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text; `offset` is the byte position of the problem.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

struct UnknownVariableError : Error {
  UnknownVariableError(const std::string& name, std::size_t offset)
      : Error("unknown variable '" + name + "' (at byte " + std::to_string(offset) + ")"),
        name(name),
        offset(offset) {}
  std::string name;
  std::size_t offset = 0;
};

struct RingMismatchError : Error {
  using Error::Error;
};

struct ArityError : Error {
  using Error::Error;
};

// A computation exceeded its configured step/size budget. Always explicit,
// never a silently truncated answer.
struct ResourceLimitError : Error {
  using Error::Error;
};

struct DecompositionIncompleteError : Error {
  using Error::Error;
};

struct NilpotencyError : Error {
  using Error::Error;
};

struct ConeRankError : Error {
  using Error::Error;
};

struct WeightOutsideConeError : Error {
  using Error::Error;
};

struct ScenarioError : Error {
  using Error::Error;
};

}  // namespace quotcert
