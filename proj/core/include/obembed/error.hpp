#pragma once

#include <stdexcept>
#include <string>

namespace obembed {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from programming errors can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A twist word refers to a boundary or curve that does not exist on the page.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

class PageMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

// Monodromy data that does not fit the page it is paired with.
class InvalidMonodromy : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

// The requested computation does not apply to this input (for example push
// letters handed to the sphere-twist embedding engine).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class MalformedPairing : public Error {
 public:
  using Error::Error;
};

// Malformed arguments or file contents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace obembed
