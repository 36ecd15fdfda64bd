#pragma once

#include <stdexcept>
#include <string>

namespace ssb {

// Config / input errors (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// An operation left the enumerated length window or the degree truncation
// window (CLI exit code 3).  Never silently truncated.
struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& m) : std::runtime_error(m) {}
};

// A graded-rank extraction did not stabilize inside the window, or a
// quotient series failed to be a polynomial multiple of the series of R.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& m) : std::runtime_error(m) {}
};

// Exact arithmetic reached a state the theory forbids (failed exact
// division, inconsistent solve).  Always a bug or a broken realization.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ssb
