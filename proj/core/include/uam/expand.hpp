#pragma once
#include "uam/curve.hpp"
#include "uam/series.hpp"

namespace uam {

// Retry ladder for expansion orders: budgets double until this cap.
constexpr int MAX_EXPANSION_ORDER = 1 << 10;

// pi-expansion engine at the place at infinity. Computes x(pi), y(pi) once
// (reliable to order N plus headroom) and expands field elements and forms
// against them. 1/x satisfies s = pi^2 * rev(f)(s) and is found by fixpoint
// iteration; y = x^g / pi exactly.
struct Expander {
  const CurveModel& C;
  int N;  // requested reliable order
  LaurentSeries xs, ys;

  Expander(const CurveModel& curve, int order);

  LaurentSeries x_pow(int e) const;             // x^e, e may be negative
  LaurentSeries expand(const FuncElem& u) const;
  // coefficient series of omega against dpi (i.e. u(pi) * dx/dpi)
  LaurentSeries expand_form(const OneForm& w) const;

 private:
  LaurentSeries expand_poly(const Poly& p) const;
  LaurentSeries expand_ratfn(const RatFn& r) const;
};

// Order of vanishing at infinity, negated: x has pole order 2, so
// pole_order_at_infinity(x) = 2; a function vanishing to order k gives -k.
// ZeroInput for the zero element.
int pole_order_at_infinity(const FuncElem& u, const CurveModel& curve);
// Same for a 1-form, measured against dpi: logarithmic poles give 1.
int form_pole_order(const OneForm& w, const CurveModel& curve);

// Cancel the principal part of `target` (a function-valued series in pi) by a
// polynomial A in K[x,y], spanned by x^a (pole 2a) and x^a y (pole 2a+2g+1).
// All orders >= cancel_down_to are removed; what survives below is returned
// as the residual. Odd pole orders in 1..2g-1 cannot be reached by the
// monomial basis -> OddGapUnreachable (those need the gauge functions
// h^{t,0}_1, which the caller must peel off first).
struct PrincipalPartResult {
  FuncElem A;
  LaurentSeries residual;
};
PrincipalPartResult principal_part_solve(const LaurentSeries& target, const CurveModel& curve,
                                         const Expander& ex, int cancel_down_to);

}  // namespace uam
