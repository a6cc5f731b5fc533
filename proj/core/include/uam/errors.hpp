#pragma once
#include <stdexcept>
#include <string>

namespace uam {

// Failure category drives the process exit code of the command line tool:
// invalid input -> 2, computation failed -> 3, precision budget exhausted -> 4.
enum class ErrCat { invalid_input, computation, precision };

struct Error : std::runtime_error {
  Error(std::string kind_, ErrCat cat_, const std::string& what_)
      : std::runtime_error(kind_ + ": " + what_), kind(std::move(kind_)), cat(cat_) {}
  std::string kind;
  ErrCat cat;
};

#define UAM_ERROR(NAME, CAT)                                        \
  struct NAME : Error {                                             \
    explicit NAME(const std::string& w) : Error(#NAME, CAT, w) {}   \
  }

UAM_ERROR(NotOddModel, ErrCat::invalid_input);
UAM_ERROR(SingularCurve, ErrCat::invalid_input);
UAM_ERROR(BadBasis, ErrCat::invalid_input);
UAM_ERROR(BadF, ErrCat::invalid_input);
UAM_ERROR(BadLetter, ErrCat::invalid_input);
UAM_ERROR(OutOfRange, ErrCat::invalid_input);
UAM_ERROR(AlphabetMismatch, ErrCat::invalid_input);
UAM_ERROR(BadConstantTerm, ErrCat::invalid_input);
UAM_ERROR(ZeroInput, ErrCat::invalid_input);
UAM_ERROR(UnsupportedLevel, ErrCat::invalid_input);
UAM_ERROR(InvalidInput, ErrCat::invalid_input);

UAM_ERROR(DivisionByZero, ErrCat::computation);
UAM_ERROR(OddGapUnreachable, ErrCat::computation);
UAM_ERROR(NotIntegrable, ErrCat::computation);
UAM_ERROR(DimensionMismatch, ErrCat::computation);
UAM_ERROR(ObstructionFound, ErrCat::computation);
UAM_ERROR(NotElliptic, ErrCat::computation);
UAM_ERROR(MissingExtension, ErrCat::computation);
UAM_ERROR(NonPrimitiveLift, ErrCat::computation);
UAM_ERROR(NonLogPole, ErrCat::computation);
UAM_ERROR(OracleMissingValue, ErrCat::computation);
UAM_ERROR(UndecidableCoefficients, ErrCat::computation);

UAM_ERROR(InsufficientPrecision, ErrCat::precision);
UAM_ERROR(PrecisionExhausted, ErrCat::precision);

#undef UAM_ERROR

inline int exit_code(ErrCat c) {
  switch (c) {
    case ErrCat::invalid_input: return 2;
    case ErrCat::computation: return 3;
    case ErrCat::precision: return 4;
  }
  return 3;
}

}  // namespace uam
