#ifndef STALLINGS_ERRORS_HPP_
#define STALLINGS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stallings {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text input.  column is 1-based within the offending text; line
  // is filled in by callers that know the enclosing file (0 = unknown).
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t column, std::size_t line = 0)
        : Error(what), _column(column), _line(line) {}

    std::size_t column() const noexcept {
      return _column;
    }
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _column;
    std::size_t _line;
  };

  // Structural invariant violated by supplied data (non-deterministic
  // automaton, disconnected graph, alphabet mismatch, ...).
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t cap)
        : Error("transition monoid exceeds the element cap of "
                + std::to_string(cap)),
          _cap(cap) {}

    std::size_t cap() const noexcept {
      return _cap;
    }

   private:
    std::size_t _cap;
  };

  // An operation was called outside its precondition (e.g. identities on an
  // infinite-index subgroup).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Two independent decision methods disagreed.  Never expected; fails tests.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace stallings

#endif  // STALLINGS_ERRORS_HPP_
