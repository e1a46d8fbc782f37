#pragma once

#include <stdexcept>
#include <string>

namespace gpdkit {

  // Base of everything thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: unknown or duplicate identifiers, wrong table shapes.
  // Distinct from an axiom failure, which is reported, not thrown.
  class StructuralError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Numerical splitting of a center could not separate the blocks.
  class ResolutionFailure : public Error {
   public:
    using Error::Error;
  };

  // A combinatorial enumeration would exceed its configured budget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, std::size_t estimate)
        : Error(what), _estimate(estimate) {}

    std::size_t estimate() const noexcept {
      return _estimate;
    }

   private:
    std::size_t _estimate;
  };

}  // namespace gpdkit
