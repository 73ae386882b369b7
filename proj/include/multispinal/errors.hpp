#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace multispinal {

// Every validation failure carries a stable machine-readable kind plus a
// human-readable detail naming the failing axiom and a concrete witness.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// A Defect is a violation of a fact the implementation is entitled to rely on
// (the two simplicity criteria agreeing, the psi system being solvable). It
// maps to a distinct process exit code so it is never mistaken for bad input.
class Defect : public Error {
 public:
  using Error::Error;
};

}  // namespace multispinal
