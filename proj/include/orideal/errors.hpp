#pragma once

#include <stdexcept>

namespace orideal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown vertices, ambient-ring mismatch, invalid graph data.
class InputError : public Error {
 public:
  using Error::Error;
};

// Subset enumeration refused because the graph has more vertices than the cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree did not.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace orideal
