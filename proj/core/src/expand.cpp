#include "uam/expand.hpp"

namespace uam {

LaurentSeries ls_inv(const LaurentSeries& a) {
  if (a.zero()) throw DivisionByZero("inverse of a series that is zero to reliable order");
  int v = a.ord();
  Rat lead = a.coeff(v);
  if ((int)a.c.size() == 1)  // monomials invert exactly
    return LaurentSeries::monomial(1 / lead, -v, a.exact() ? EXACT_ORD : a.trunc - 2 * v);
  if (a.exact())
    throw InvalidInput("inverse of an exact Laurent polynomial is an infinite series; truncate first");
  // write a = c*pi^v*(1+u), invert the unit part by geometric iteration
  int t = a.trunc - 2 * v;  // 1/a reliable window
  int terms = a.trunc - v;  // orders of u: 1..terms
  LaurentSeries u = ls_truncate(ls_shift(ls_qscale(1 / lead, a), -v), terms);
  u = ls_sub(u, LaurentSeries::monomial(1, 0, terms));
  // 1/(1+u) = 1 - u + u^2 - ...
  LaurentSeries acc = LaurentSeries::monomial(1, 0, terms);
  LaurentSeries upow = u;
  int k = 1;
  while (!upow.zero() && k <= terms) {
    acc = ls_add(acc, ls_qscale((k % 2) ? -1 : 1, upow));
    upow = ls_truncate(ls_mul(upow, u), terms);
    ++k;
  }
  LaurentSeries r = ls_shift(ls_qscale(1 / lead, acc), -v);
  return ls_truncate(r, t);
}

Expander::Expander(const CurveModel& curve, int order) : C(curve), N(order) {
  if (N > MAX_EXPANSION_ORDER)
    throw PrecisionExhausted("expansion order " + std::to_string(N) + " beyond the cap " +
                             std::to_string(MAX_EXPANSION_ORDER));
  int g = C.g;
  int Ns = N + 4 * g + 8;  // headroom so that x, y and small products stay reliable past N
  // rev(f)(s) = sum f_i s^(2g+1-i); its constant term is the leading
  // coefficient of f, so s = pi^2 rev(f)(s) has a unique solution with
  // s = lc(f) pi^2 + ...
  Poly rev;
  rev.c.assign(C.f.c.rbegin(), C.f.c.rend());
  rev.trim();
  LaurentSeries s = LaurentSeries::zero_to(Ns);
  LaurentSeries pi2 = LaurentSeries::monomial(1, 2, Ns);
  for (int it = 0; it * 2 <= Ns + 2; ++it) {
    // Horner for rev(s)
    LaurentSeries acc = LaurentSeries::monomial(rev.c.back(), 0, Ns);
    for (int i = (int)rev.c.size() - 2; i >= 0; --i)
      acc = ls_add(ls_truncate(ls_mul(acc, s), Ns), LaurentSeries::monomial(rev.c[i], 0, Ns));
    s = ls_truncate(ls_mul(pi2, acc), Ns);
  }
  xs = ls_inv(s);
  LaurentSeries xg = LaurentSeries::monomial(1, 0, xs.trunc);
  for (int i = 0; i < g; ++i) xg = ls_mul(xg, xs);
  ys = ls_shift(xg, -1);  // y = x^g / pi exactly
}

LaurentSeries Expander::x_pow(int e) const {
  LaurentSeries acc = LaurentSeries::monomial(1, 0, xs.trunc);
  LaurentSeries base = e >= 0 ? xs : ls_inv(xs);
  for (int i = 0; i < std::abs(e); ++i) acc = ls_mul(acc, base);
  return acc;
}

LaurentSeries Expander::expand_poly(const Poly& p) const {
  LaurentSeries acc = LaurentSeries::zero_to(xs.trunc);
  for (int i = p.deg(); i >= 0; --i)
    acc = ls_add(ls_mul(acc, xs), LaurentSeries::monomial(p.c[i], 0, xs.trunc));
  return acc;
}

LaurentSeries Expander::expand_ratfn(const RatFn& r) const {
  if (r.zero()) return LaurentSeries::zero_to(xs.trunc);
  LaurentSeries n = expand_poly(r.num);
  if (r.is_poly()) return ls_qscale(1 / r.den.c[0], n);
  return ls_mul(n, ls_inv(expand_poly(r.den)));
}

LaurentSeries Expander::expand(const FuncElem& u) const {
  return ls_add(expand_ratfn(u.a), ls_mul(expand_ratfn(u.b), ys));
}

LaurentSeries Expander::expand_form(const OneForm& w) const {
  return ls_mul(expand(w.u), ls_deriv(xs));
}

namespace {
template <class Fn>
int pole_order_with_retry(Fn&& make_series, const char* what) {
  for (int order = 16; order <= MAX_EXPANSION_ORDER; order *= 2) {
    LaurentSeries s = make_series(order);
    if (!s.zero()) return -s.ord();
  }
  throw InsufficientPrecision(std::string("no nonzero coefficient found for ") + what +
                              " within the expansion cap");
}
}  // namespace

int pole_order_at_infinity(const FuncElem& u, const CurveModel& curve) {
  if (u.zero()) throw ZeroInput("pole order of the zero element");
  return pole_order_with_retry(
      [&](int order) { return Expander(curve, order).expand(u); }, "function");
}

int form_pole_order(const OneForm& w, const CurveModel& curve) {
  if (w.zero()) throw ZeroInput("pole order of the zero form");
  // measured against dpi, so a logarithmic pole c*dpi/pi has order 1
  return pole_order_with_retry(
      [&](int order) { return Expander(curve, order).expand_form(w); }, "form");
}

PrincipalPartResult principal_part_solve(const LaurentSeries& target, const CurveModel& curve,
                                         const Expander& ex, int cancel_down_to) {
  PrincipalPartResult out;
  out.residual = target;
  int g = curve.g;
  while (!out.residual.zero()) {
    int d = -out.residual.ord();
    if (d < cancel_down_to) break;
    Rat c = out.residual.coeff(-d);
    FuncElem cand;
    if (d >= 0 && d % 2 == 0) {
      cand = FuncElem::of_x(Poly::monomial(1, d / 2));
    } else if (d >= 2 * g + 1) {
      cand = FuncElem{RatFn(), RatFn::of(Poly::monomial(1, (d - (2 * g + 1)) / 2))};
    } else {
      throw OddGapUnreachable("principal part term of odd order " + std::to_string(d) +
                              " not in the span of x^a, x^a y");
    }
    LaurentSeries ce = ex.expand(cand);
    Rat lead = ce.coeff(-d);
    FuncElem scaled = fe_scale(c / lead, cand);
    out.A = fe_add(out.A, scaled);
    out.residual = ls_sub(out.residual, ls_qscale(c / lead, ce));
  }
  return out;
}

}  // namespace uam
