#include "uam/poly.hpp"

#include <sstream>

namespace uam {

Poly Poly::monomial(const Rat& r, int deg) {
  Poly p;
  if (is_zero(r)) return p;
  p.c.assign(deg + 1, Rat(0));
  p.c[deg] = r;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly operator*(const Rat& s, const Poly& a) {
  if (is_zero(s)) return Poly{};
  Poly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.zero()) throw DivisionByZero("polynomial division by zero");
  Poly q, r = a;
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rat(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    Rat f = r.lc() / b.lc();
    int d = r.deg() - b.deg();
    q.c[d] = f;
    // r -= f * x^d * b
    for (int i = 0; i <= b.deg(); ++i) r.c[i + d] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) a = (Rat(1) / a.lc()) * a;
  return a;
}

Poly deriv(const Poly& a) {
  Poly r;
  if (a.deg() < 1) return r;
  r.c.resize(a.deg());
  for (int i = 1; i <= a.deg(); ++i) r.c[i - 1] = Rat(i) * a.c[i];
  r.trim();
  return r;
}

Rat eval(const Poly& a, const Rat& x) {
  Rat acc = 0;
  for (int i = a.deg(); i >= 0; --i) acc = acc * x + a.c[i];
  return acc;
}

bool squarefree(const Poly& a) {
  if (a.zero()) return false;
  if (a.deg() == 0) return true;
  return gcd(a, deriv(a)).deg() == 0;
}

std::string poly_str(const Poly& a, const std::string& var) {
  if (a.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = a.deg(); i >= 0; --i) {
    if (is_zero(a.c[i])) continue;
    Rat v = a.c[i];
    if (first) {
      if (sgn(v) < 0) { os << "-"; v = -v; }
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
      if (sgn(v) < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1);
    if (i == 0 || !unit) os << rat_str(v);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace uam
