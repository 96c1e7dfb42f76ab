#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbgeo {

enum class ErrorKind {
  Domain,                   // argument outside the domain of the operation
  Degenerate,               // coincident points or identical maps
  Infeasible,               // interpolation data cannot be matched
  InfeasibleUnbalanced,     // no lift pairing with equal distances
  InfeasibleRoyalCrossing,  // balanced pairing, but f1 - f2 vanishes in the disc
  Ambiguous,                // pairing mismatch in the grey zone (1e-9, 1e-6)
  CertificationFailure,
  Classification,           // more than one isolated royal intersection
  Malformed,                // unreadable input (JSON, arguments)
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sbgeo
