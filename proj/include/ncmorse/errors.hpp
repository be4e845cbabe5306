#pragma once

#include <stdexcept>
#include <string>

namespace ncmorse {

// Malformed data: unknown ids, unparsable files, dangling references.
class invalid_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The inputs are well formed but an operation's precondition does not hold
// (e.g. a function that is not a modified Morse function).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function passes the per-chain counting test but its exceptional
// neighbours pair some chain twice.
class invalid_morse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the supported class (dimension gaps,
// non-invertible matched incidences).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void throw_invalid_input(const std::string& what);

}  // namespace ncmorse
