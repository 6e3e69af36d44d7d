//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#ifndef CYCRED_ERROR_HPP_
#define CYCRED_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycred {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An input violated a documented precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A checked computation (trace replay, collapse op, file invariant) did
  //! not validate.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed text; \c offset is the byte offset of the offending input.
  class ParseError : public Error {
   public:
    ParseError(std::size_t offset, std::string const& what)
        : Error("parse error at byte " + std::to_string(offset) + ": " + what),
          _offset(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

  //! Reading or writing a file failed.
  class IoError : public Error {
   public:
    using Error::Error;
  };

}  // namespace cycred

#endif  // CYCRED_ERROR_HPP_
