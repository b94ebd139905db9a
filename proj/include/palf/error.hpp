#pragma once

#include <stdexcept>
#include <string>

namespace palf {

// Raised for contract violations on the algebraic layer: bad hole ranges,
// rank mismatches, surface mismatches, unsupported genus.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SurfaceMismatch : public Error {
 public:
  SurfaceMismatch() : Error("operands live on different surfaces") {}
};

}  // namespace palf
