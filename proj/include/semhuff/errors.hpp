#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semhuff {

enum class ErrorKind {
  InvalidInput,
  InvalidDistribution,
  EmptyModel,
  EmptyCorpus,
  UnknownToken,
  DisjointnessViolation,
  TruncatedStream,
  TrailingGarbage,
  FormatError,
  IoError,
};

// All library failures are reported through this single exception type.
// The kind distinguishes bad user data (tokens, thesauri, distributions)
// from broken files and streams; the message carries the offending token,
// line, or position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

}  // namespace semhuff
