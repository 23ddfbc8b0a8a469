#pragma once
#include <stdexcept>
#include <string>

namespace regflow {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (instance files, DIMACS files, trace files).
/// Carries the 1-based line number when one is known.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Precondition or argument violations: dimension mismatches, vectors outside
/// the space, out-of-range indices, oracle/mode mismatches.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A theory guarantee failed at runtime: a primitive vector did not normalize
/// to {-1,0,+1}, a conformal pair did not contain exactly two r-paths, or the
/// augmentation count exceeded its bound. Signals non-regular input or an
/// implementation fault; callers must not continue.
class InvariantError : public Error {
public:
  explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace regflow
