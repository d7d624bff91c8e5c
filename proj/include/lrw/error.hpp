// Exception types shared by every lrw module.

#ifndef LRW_ERROR_HPP_
#define LRW_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrw {

  // Base class for all errors raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text; `line()` is 1-based, 0 when unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // An operation was called on an input that violates its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // The Cayley ball grew past the configured vertex cap.
  class ResourceLimitError : public Error {
   public:
    using Error::Error;
  };

}  // namespace lrw

#endif  // LRW_ERROR_HPP_
