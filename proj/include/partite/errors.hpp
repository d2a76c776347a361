#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partite {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument values (bad r or k, out-of-range vertex, loop edge, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Violated call contract (empty set where a nonempty one is required,
// universe mismatch between sets, cycle that is not a shortest odd cycle).
struct ContractError : Error {
  using Error::Error;
};

// Requested construction has no realization under its defining formulas.
struct InfeasibleError : Error {
  using Error::Error;
};

// Malformed input; carries the byte offset of the offending character.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off) : Error(what), offset(off) {}
};

}  // namespace partite
