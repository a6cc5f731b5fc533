#pragma once
#include <string>

#include "uam/poly.hpp"

namespace uam {

// Reduced fraction of polynomials in x. Canonical form: gcd(num,den) = 1 and
// den monic, so syntactic equality is field equality.
struct RatFn {
  Poly num, den = Poly::constant(1);

  RatFn() = default;
  RatFn(Poly n, Poly d);
  static RatFn of(const Poly& p) { RatFn r; r.num = p; return r; }
  static RatFn constant(const Rat& v) { return of(Poly::constant(v)); }

  bool zero() const { return num.zero(); }
  bool is_poly() const { return den.deg() == 0; }
  bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
};

RatFn operator+(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a);
RatFn operator*(const RatFn& a, const RatFn& b);
RatFn operator*(const Rat& s, const RatFn& a);
RatFn inv(const RatFn& a);
RatFn deriv(const RatFn& a);
Rat eval(const RatFn& a, const Rat& x);  // DivisionByZero if den(x) = 0
std::string ratfn_str(const RatFn& a);

// Element a(x) + b(x)*y of the function field K(C), C : y^2 = f(x).
// The curve polynomial is passed to every operation that needs the relation
// y^2 = f; elements themselves stay plain values.
struct FuncElem {
  RatFn a, b;

  static FuncElem of_x(const Poly& p) { FuncElem e; e.a = RatFn::of(p); return e; }
  static FuncElem constant(const Rat& v) { FuncElem e; e.a = RatFn::constant(v); return e; }
  static FuncElem y_times(const RatFn& r) { FuncElem e; e.b = r; return e; }

  bool zero() const { return a.zero() && b.zero(); }
  bool operator==(const FuncElem& o) const { return a == o.a && b == o.b; }
};

inline bool is_zero(const FuncElem& u) { return u.zero(); }

FuncElem fe_add(const FuncElem& u, const FuncElem& v);
FuncElem fe_sub(const FuncElem& u, const FuncElem& v);
FuncElem fe_neg(const FuncElem& u);
FuncElem fe_scale(const Rat& s, const FuncElem& u);
FuncElem fe_mul(const FuncElem& u, const FuncElem& v, const Poly& f);
FuncElem fe_inv(const FuncElem& u, const Poly& f);  // DivisionByZero on 0
FuncElem fe_pow(FuncElem u, long e, const Poly& f);
Rat fe_eval(const FuncElem& u, const Rat& x, const Rat& y);
std::string fe_str(const FuncElem& u);

// A regular 1-form on an affine chart, written u*dx with u in K(C).
struct OneForm {
  FuncElem u;
  bool zero() const { return u.zero(); }
  bool operator==(const OneForm& o) const { return u == o.u; }
};

inline OneForm wf_add(const OneForm& w, const OneForm& v) { return {fe_add(w.u, v.u)}; }
inline OneForm wf_sub(const OneForm& w, const OneForm& v) { return {fe_sub(w.u, v.u)}; }
inline OneForm wf_neg(const OneForm& w) { return {fe_neg(w.u)}; }
inline OneForm wf_scale(const Rat& s, const OneForm& w) { return {fe_scale(s, w.u)}; }
inline OneForm wf_mul(const FuncElem& g, const OneForm& w, const Poly& f) {
  return {fe_mul(g, w.u, f)};
}

// Exterior derivative d(a + b y) = (a' + b' y + b f'/(2f) y) dx, using
// dy = f'(x)/(2y) dx and 1/y = y/f.
OneForm fe_d(const FuncElem& u, const Poly& f);

}  // namespace uam
