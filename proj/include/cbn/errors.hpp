#pragma once

#include <stdexcept>
#include <string>

namespace cbn {

// Input text does not conform to the network file format.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation would exceed a configured resource cap (state-space size,
// component count for the bound formulas, ...).
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A formula that requires every strongly connected component to be
// non-trivial (to carry at least one cycle) was asked to run on a graph
// with a trivial component.
class TrivialComponentError : public std::invalid_argument {
 public:
  explicit TrivialComponentError(const std::string& msg)
      : std::invalid_argument(msg) {}
};

}  // namespace cbn
