#pragma once

#include <stdexcept>
#include <string>

namespace zsub {

  /// Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Input text could not be turned into a valid object (bad .cay file,
  /// bad MSpec or generator list, bad JSON document).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class MalformedTable : public ParseError {
   public:
    MalformedTable(std::string const& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
  };

  class NotAssociative : public ParseError {
   public:
    // Indices are 1-based, as in the table.
    NotAssociative(unsigned i, unsigned j, unsigned k);
    unsigned i, j, k;
  };

  /// An operation was called on a semigroup of the wrong kind (regular when
  /// a non-regular one is required, or vice versa).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  class RegularSemigroup : public PreconditionError {
   public:
    RegularSemigroup();
  };

  class NotRegular : public PreconditionError {
   public:
    explicit NotRegular(unsigned element);
  };

  class NotSameRegularClass : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  class WindowTooSmall : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  class EmptyGenerators : public InvalidArgument {
   public:
    EmptyGenerators();
  };

  class UnsupportedParams : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  class GeneratorsNotInP : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  class NotInP : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  class NotPMShaped : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  /// A fiber does not have the shape forced by closure; the description
  /// was not closed or has been corrupted.
  class StructureViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace zsub
