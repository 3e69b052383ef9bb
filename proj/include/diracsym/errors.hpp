#pragma once

#include <stdexcept>
#include <string>

namespace diracsym {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural misuse of the API (wrong vector length, non-symmetric gram, ...).
struct DimensionMismatch : Error {
  using Error::Error;
};

// Malformed textual input (rationals, catalog files, CLI values).
struct ParseError : Error {
  using Error::Error;
};

// A requested enumeration would exceed the configured resource cap.
struct CapExceeded : Error {
  using Error::Error;
};

// Construction-time validation failures for symmetric pairs.
struct ClosureViolation : Error {
  using Error::Error;
};
struct BadHalfSums : Error {
  using Error::Error;
};
struct WolfViolation : Error {
  using Error::Error;
};

// Structure gates.
struct NotSpin : Error {
  using Error::Error;
};
struct NotKahler : Error {
  using Error::Error;
};
struct NotQuaternionKahler : Error {
  using Error::Error;
};

// A mathematically guaranteed identity failed; indicates a bug, never a data
// condition. Messages carry the witness.
struct AssertionFailure : Error {
  using Error::Error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw AssertionFailure(what);
}

}  // namespace diracsym
