#pragma once

#include <stdexcept>
#include <string>

namespace regmark {

// Base class for all domain errors raised by this library. Rule violations in
// user data are reported through ValidationReport values, not exceptions;
// exceptions are reserved for contract breaches (malformed inputs).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IdenticalPointsError : public Error {
 public:
  using Error::Error;
};

class IdenticalLinesError : public Error {
 public:
  using Error::Error;
};

class NotCollinearError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

class DuplicateLineError : public Error {
 public:
  using Error::Error;
};

class BadKError : public Error {
 public:
  using Error::Error;
};

class UnknownPointError : public Error {
 public:
  using Error::Error;
};

class NotACentrexError : public Error {
 public:
  using Error::Error;
};

class TooFewPointsError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegenerateError : public Error {
 public:
  using Error::Error;
};

// Parse failures carry the 1-based line number of the offending record.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line_no)
      : Error(message), line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

}  // namespace regmark
