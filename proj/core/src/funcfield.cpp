#include "uam/funcfield.hpp"

#include <sstream>

namespace uam {

RatFn::RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.zero()) throw DivisionByZero("rational function with zero denominator");
  Poly g = gcd(num, den);
  if (g.deg() > 0) {
    num = divrem(num, g).first;
    den = divrem(den, g).first;
  }
  if (num.zero()) {
    den = Poly::constant(1);
  } else if (!(den.lc() == 1)) {
    Rat s = Rat(1) / den.lc();
    num = s * num;
    den = s * den;
  }
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
RatFn operator-(const RatFn& a) {
  RatFn r = a;
  r.num = -r.num;
  return r;
}
RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.num, a.den * b.den); }
RatFn operator*(const Rat& s, const RatFn& a) {
  if (is_zero(s)) return RatFn();
  RatFn r = a;
  r.num = s * r.num;
  return r;
}
RatFn inv(const RatFn& a) {
  if (a.zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFn(a.den, a.num);
}
RatFn deriv(const RatFn& a) {
  // (n/d)' = (n'd - nd')/d^2
  return RatFn(deriv(a.num) * a.den - a.num * deriv(a.den), a.den * a.den);
}
Rat eval(const RatFn& a, const Rat& x) {
  Rat d = eval(a.den, x);
  if (is_zero(d)) throw DivisionByZero("rational function pole at evaluation point");
  return eval(a.num, x) / d;
}
std::string ratfn_str(const RatFn& a) {
  if (a.is_poly()) return poly_str(a.num);
  return "(" + poly_str(a.num) + ")/(" + poly_str(a.den) + ")";
}

FuncElem fe_add(const FuncElem& u, const FuncElem& v) { return {u.a + v.a, u.b + v.b}; }
FuncElem fe_sub(const FuncElem& u, const FuncElem& v) { return {u.a - v.a, u.b - v.b}; }
FuncElem fe_neg(const FuncElem& u) { return {-u.a, -u.b}; }
FuncElem fe_scale(const Rat& s, const FuncElem& u) { return {s * u.a, s * u.b}; }

FuncElem fe_mul(const FuncElem& u, const FuncElem& v, const Poly& f) {
  RatFn ff = RatFn::of(f);
  return {u.a * v.a + u.b * v.b * ff, u.a * v.b + u.b * v.a};
}

FuncElem fe_inv(const FuncElem& u, const Poly& f) {
  if (u.zero()) throw DivisionByZero("inverse of zero function field element");
  // 1/(a+by) = (a-by)/(a^2 - b^2 f); the norm is nonzero since f has odd
  // degree and hence is not a square in K(x).
  RatFn n = u.a * u.a - u.b * u.b * RatFn::of(f);
  RatFn ninv = inv(n);
  return {u.a * ninv, -(u.b * ninv)};
}

FuncElem fe_pow(FuncElem u, long e, const Poly& f) {
  if (e < 0) {
    u = fe_inv(u, f);
    e = -e;
  }
  FuncElem acc = FuncElem::constant(1);
  while (e) {
    if (e & 1) acc = fe_mul(acc, u, f);
    u = fe_mul(u, u, f);
    e >>= 1;
  }
  return acc;
}

Rat fe_eval(const FuncElem& u, const Rat& x, const Rat& y) {
  return eval(u.a, x) + eval(u.b, x) * y;
}

std::string fe_str(const FuncElem& u) {
  if (u.zero()) return "0";
  std::ostringstream os;
  bool have = false;
  if (!u.a.zero()) {
    os << ratfn_str(u.a);
    have = true;
  }
  if (!u.b.zero()) {
    if (have) os << " + ";
    os << "(" << ratfn_str(u.b) << ")*y";
  }
  return os.str();
}

OneForm fe_d(const FuncElem& u, const Poly& f) {
  RatFn bpart = deriv(u.b) + u.b * RatFn(deriv(f), Poly::constant(2) * f);
  return {FuncElem{deriv(u.a), bpart}};
}

}  // namespace uam
