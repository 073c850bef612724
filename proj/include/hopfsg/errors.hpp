#ifndef HOPFSG_ERRORS_HPP_
#define HOPFSG_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string, to_string
#include <utility>    // for move

namespace hopfsg {

  //! Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A syntax or semantic error in textual input, with its location.
  //!
  //! The message has the form `source:line:column: what (at 'token')`.
  class ParseError : public Error {
   public:
    ParseError(std::string source,
               std::size_t line,
               std::size_t column,
               std::string token,
               std::string const& what)
        : Error(source + ":" + std::to_string(line) + ":"
                + std::to_string(column) + ": " + what + " (at '" + token
                + "')"),
          _source(std::move(source)),
          _line(line),
          _column(column),
          _token(std::move(token)) {}

    std::string const& source() const noexcept {
      return _source;
    }
    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    std::string const& token() const noexcept {
      return _token;
    }

   private:
    std::string _source;
    std::size_t _line;
    std::size_t _column;
    std::string _token;
  };

  //! Thrown when a bounded procedure runs out of its budget.
  class FuelExhausted : public Error {
   public:
    FuelExhausted(std::string const& what, std::size_t fuel)
        : Error(what + " (fuel " + std::to_string(fuel) + ")"), _fuel(fuel) {}

    std::size_t fuel() const noexcept {
      return _fuel;
    }

   private:
    std::size_t _fuel;
  };

}  // namespace hopfsg

#endif  // HOPFSG_ERRORS_HPP_
