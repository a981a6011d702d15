#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricred {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Parse,          // malformed input text
  Precondition,   // caller violated an operation's contract
  Degenerate,     // degenerate elimination / infinitely many roots
  Cap,            // an internal search or enumeration cap was exceeded
  Numeric,        // floating-point oracle failed to converge or cluster
  Ambiguous,      // exact extraction admits several consistent answers
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

// Stage-tagged failure of an elimination cascade, or a resultant that
// cannot certify a finite root count.
class DegenerateError : public Error {
 public:
  enum class Reason { Elimination, Resultant, PositiveDimensional, FillGenericity };
  DegenerateError(Reason reason, const std::string& what)
      : Error(ErrorKind::Degenerate, what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorKind::Cap, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

struct EpsilonSplit {
  int plus = 0;
  int minus = 0;
};

class AmbiguousExtraction : public Error {
 public:
  AmbiguousExtraction(const std::string& what, std::vector<EpsilonSplit> candidates)
      : Error(ErrorKind::Ambiguous, what), candidates_(std::move(candidates)) {}
  const std::vector<EpsilonSplit>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<EpsilonSplit> candidates_;
};

}  // namespace toricred
