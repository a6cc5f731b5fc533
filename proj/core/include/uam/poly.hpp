#pragma once
#include <initializer_list>
#include <string>
#include <vector>

#include "uam/rational.hpp"

namespace uam {

// Dense univariate polynomial over Q, coefficients stored ascending.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  Poly(std::initializer_list<Rat> l) : c(l) { trim(); }
  explicit Poly(std::vector<Rat> l) : c(std::move(l)) { trim(); }
  static Poly constant(const Rat& r) { return Poly{std::vector<Rat>{r}}; }
  static Poly monomial(const Rat& r, int deg);

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  const Rat& lc() const { return c.back(); }
  Rat coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rat(0); }

  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);

// Field division: a = q*b + r with deg r < deg b. Throws DivisionByZero on b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic gcd, gcd(0,0) = 0
Poly deriv(const Poly& a);
Rat eval(const Poly& a, const Rat& x);
bool squarefree(const Poly& a);
std::string poly_str(const Poly& a, const std::string& var = "x");

}  // namespace uam
