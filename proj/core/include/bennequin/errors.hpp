#pragma once

#include <stdexcept>
#include <string>

namespace bennequin {

// Base class for all library errors, so callers can catch the whole family.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text (braid word, front word, corpus file) failed to parse or
// validate; the message pinpoints the offending token/row.
class parse_error : public error {
 public:
  using error::error;
};

// An operation's mathematical precondition failed (non-knot closure,
// non-coprime torus parameters, index out of range, ...).
class domain_error : public error {
 public:
  using error::error;
};

}  // namespace bennequin
