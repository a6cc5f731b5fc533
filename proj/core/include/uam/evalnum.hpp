#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uam/expand.hpp"
#include "uam/iisym.hpp"

namespace uam {

// Numeric evaluation of iterated integrals from a tangential basepoint at
// infinity. Everything is exact: a value lives in Q[L] where L is the one
// free log symbol (the branch value of log of the disk parameter); an
// optional substitution turns it into a plain rational at the end.
using LogVal = LogPoly<Rat>;

Rat eval_log(const LogVal& v, const Rat& log_value);  // substitute L

// A point of the residue disk of infinity, given by its parameter value.
// z = 0 is the puncture itself and is rejected.
struct DiskPoint {
  Rat z;
};
DiskPoint disk_point(const Rat& z);  // InvalidInput at z = 0

// Function of one disk variable: polynomial in log t whose coefficients are
// finite Laurent polynomials in t over Q[L]. Truncated expansions entering
// the integrator are reinterpreted as genuine finite forms (the caller
// chooses the budget); all arithmetic on them is then exact.
using LogFn = LogPoly<LSer<LogVal>>;

// The logarithmic Coleman function a_0(sigma) + a_1(sigma) log(sigma) + ...
// produced by the nested formal antiderivatives from the dummy lower
// endpoint sigma, with the outer upper limit already evaluated at z (which
// is where the L = log z terms come from).
struct LogColeman {
  LogFn f;  // symbol = log sigma, series variable = sigma
  // set sigma = log(sigma) = 0: the constant-term map defining the
  // regularized integral
  LogVal regularized() const;
};

// The nested integral of the listed forms, innermost last, each form given
// as the coefficient series of omega against d(pi): omega = f(pi) d(pi).
// Forms must have at worst a first-order pole (the formal rule
// "integral of d(sigma)/sigma = log(sigma)" covers order -1); an order
// below -1 raises NonLogPole. A truncated form whose reliable window does
// not even reach order -1 cannot be regularized: PrecisionExhausted.
//
// allow_higher_poles disables the order check: the termwise antiderivative
// extends to any pole order, and the constant-term map then discards the
// principal part (so e.g. the regularized integral of dF for F with a
// simple pole is F(z) minus the 0-limit of the regular part of F).
LogColeman formal_iterated_integral(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                                    bool allow_higher_poles = false);

// The regularized value: sigma = log(sigma) = 0 in the above. The empty
// list gives 1.
LogVal tangential_value(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                        bool allow_higher_poles = false);
Rat tangential_value(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                     const Rat& log_value);

// Values of the cross-disk prefix integrals int_y^x w_1..w_i, keyed by the
// labels of the forms. Supplied externally (a table loaded from JSON in the
// command line tool); must satisfy the shuffle relations on the values it
// supplies, which compose_paths spot-checks where the word allows it.
struct IntegralOracle {
  virtual ~IntegralOracle() = default;
  // throws OracleMissingValue when the word is not covered
  virtual Rat prefix(const std::vector<std::string>& word) const = 0;
};

struct MapOracle final : IntegralOracle {
  std::map<std::string, Rat> table;  // key: labels joined by single spaces
  Rat prefix(const std::vector<std::string>& word) const override;
};

// Path composition for an endpoint x outside the disk, split at y inside:
//   int_b^x w_1..w_n = sum_{i=0..n} int_y^x w_1..w_i * int_b^y w_{i+1}..w_n
// with the empty integral equal to 1, the first factor from the oracle and
// the second from tangential_value. InvalidInput when a repeated-prefix
// shuffle relation fails on the oracle's own values.
LogVal compose_paths(const std::vector<std::pair<std::string, LaurentSeries>>& forms,
                     const DiskPoint& y, const IntegralOracle& oracle);

// Evaluate a symbolic iterated-integral combination: each registry index is
// expanded at infinity with the supplied expander, every symbol word becomes
// a tangential_value, and monomials multiply in Q[L].
LogVal eval_tangential(const IIPoly& p, const FormRegistry& reg, const Expander& ex,
                       const DiskPoint& z);

}  // namespace uam
