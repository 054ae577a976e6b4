#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotcover {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? msg
                          : "line " + std::to_string(line) + ", column "
                                + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    // 1-based; 0 when the input has no line structure.
    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // An argument outside the operation's domain (j < 1, index 0, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A search or enumeration exceeded its configured bound.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  class MissingAssignmentError : public Error {
   public:
    using Error::Error;
  };

  // The generator assignment does not satisfy every relator.
  class InvalidHomomorphismError : public Error {
   public:
    using Error::Error;
  };

  // A coset table that is not closed, not consistent or not transitive.
  class IntegrityError : public Error {
   public:
    using Error::Error;
  };

  // A construction whose defining data contradicts a relator.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace knotcover
