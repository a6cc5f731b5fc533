#pragma once
#include <algorithm>
#include <map>
#include <vector>

#include "uam/rational.hpp"

namespace uam {

// Truncated Laurent series over a coefficient ring R. We track how far the
// coefficients are reliable: coeff(k) is stored for val <= k <= trunc, known
// to be 0 for k < val, and *unknown* past trunc. Asking for an unknown
// coefficient throws InsufficientPrecision rather than silently returning 0.
//
// A series with trunc == EXACT_ORD is a finite Laurent polynomial treated as
// exact to all orders (used by the numeric integrator, where truncations of
// expansions are reinterpreted as genuine finite forms).
constexpr int EXACT_ORD = 1 << 28;

template <class R>
R qscale(const Rat& s, const R& x);  // forward; specialised per ring below

inline Rat qscale(const Rat& s, const Rat& x) { return s * x; }

template <class R>
struct LSer {
  int val = 0;              // lowest stored order
  std::vector<R> c;         // c[i] = coefficient of pi^(val+i)
  int trunc = EXACT_ORD;    // highest reliable order

  LSer() = default;
  static LSer zero_to(int t) {
    LSer s;
    s.val = t + 1;
    s.trunc = t;
    return s;
  }
  static LSer monomial(R r, int k, int t = EXACT_ORD) {
    LSer s;
    s.trunc = t;
    if (is_zero(r) || k > t) { s.val = t + 1; return s; }
    s.val = k;
    s.c.push_back(std::move(r));
    return s;
  }

  void normalize() {
    while (!c.empty() && is_zero(c.front())) {
      c.erase(c.begin());
      ++val;
    }
    while (!c.empty() && is_zero(c.back()) && val + (int)c.size() - 1 > trunc) c.pop_back();
    if ((int)c.size() > trunc - val + 1) c.resize(std::max(0, trunc - val + 1));
    if (c.empty()) val = trunc + 1;
  }

  bool zero() const { return c.empty(); }       // zero to reliable order
  bool exact() const { return trunc >= EXACT_ORD; }
  // order of the lowest nonzero coefficient; trunc+1 when zero-to-reliable
  int ord() const { return c.empty() ? trunc + 1 : val; }
  int top() const { return val + (int)c.size() - 1; }

  R coeff(int k) const {
    if (k > trunc)
      throw InsufficientPrecision("series coefficient at order " + std::to_string(k) +
                                  " beyond reliable order " + std::to_string(trunc));
    if (k < val || k > top()) return R{};
    return c[k - val];
  }
};

template <class R>
bool is_zero(const LSer<R>& s) {
  return s.zero();
}

namespace detail {
inline long add_ord(long a, long b) { return std::min<long>(a + b, EXACT_ORD); }
}  // namespace detail

template <class R>
LSer<R> ls_add(const LSer<R>& a, const LSer<R>& b) {
  LSer<R> r;
  r.trunc = std::min(a.trunc, b.trunc);
  int lo = std::min(a.ord(), b.ord());
  if (lo > r.trunc) return LSer<R>::zero_to(r.trunc);
  // tops of zero series are meaningless (val past trunc); ignore them so an
  // exact zero cannot inflate the window to EXACT_ORD
  int hi = lo - 1;
  if (!a.zero()) hi = std::max(hi, a.top());
  if (!b.zero()) hi = std::max(hi, b.top());
  hi = std::min(hi, r.trunc);
  r.val = lo;
  r.c.assign(hi - lo + 1, R{});
  for (int k = lo; k <= hi; ++k) {
    R v{};
    if (k >= a.val && k <= a.top()) v = v + a.c[k - a.val];
    if (k >= b.val && k <= b.top()) v = v + b.c[k - b.val];
    r.c[k - lo] = v;
  }
  r.normalize();
  return r;
}

template <class R>
LSer<R> ls_neg(const LSer<R>& a) {
  LSer<R> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <class R>
LSer<R> ls_sub(const LSer<R>& a, const LSer<R>& b) {
  return ls_add(a, ls_neg(b));
}

template <class R>
LSer<R> ls_qscale(const Rat& s, const LSer<R>& a) {
  if (is_zero(s)) return LSer<R>::zero_to(a.trunc);
  LSer<R> r = a;
  for (auto& x : r.c) x = qscale(s, x);
  r.normalize();
  return r;
}

template <class R>
LSer<R> ls_mul(const LSer<R>& a, const LSer<R>& b) {
  // reliable through min(a.trunc + ord(b), b.trunc + ord(a))
  long t = std::min(detail::add_ord(a.trunc, b.ord()), detail::add_ord(b.trunc, a.ord()));
  int tr = (int)std::min<long>(t, EXACT_ORD);
  if (a.zero() || b.zero()) return LSer<R>::zero_to(tr);
  LSer<R> r;
  r.trunc = tr;
  r.val = a.val + b.val;
  if (r.val > r.trunc) return LSer<R>::zero_to(r.trunc);
  int hi = std::min<long>((long)a.top() + b.top(), r.trunc);
  r.c.assign(hi - r.val + 1, R{});
  for (int i = 0; i < (int)a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j < (int)b.c.size(); ++j) {
      int k = a.val + i + b.val + j;
      if (k > hi) break;
      r.c[k - r.val] = r.c[k - r.val] + a.c[i] * b.c[j];
    }
  }
  r.normalize();
  return r;
}

template <class R>
LSer<R> ls_shift(const LSer<R>& a, int k) {
  LSer<R> r = a;
  r.val += k;
  if (!r.exact()) r.trunc += k;
  return r;
}

template <class R>
LSer<R> ls_truncate(const LSer<R>& a, int t) {
  LSer<R> r = a;
  if (t < r.trunc) {
    r.trunc = t;
    r.normalize();
  }
  return r;
}

template <class R>
LSer<R> ls_deriv(const LSer<R>& a) {
  LSer<R> r;
  r.trunc = a.exact() ? EXACT_ORD : a.trunc - 1;
  r.val = a.val - 1;
  r.c.resize(a.c.size());
  for (int i = 0; i < (int)a.c.size(); ++i) r.c[i] = qscale(Rat(a.val + i), a.c[i]);
  r.normalize();
  return r;
}

// Termwise antiderivative; the caller must have removed any order -1 term.
template <class R>
LSer<R> ls_antider(const LSer<R>& a) {
  LSer<R> r;
  r.trunc = a.exact() ? EXACT_ORD : a.trunc + 1;
  r.val = a.val + 1;
  r.c.resize(a.c.size());
  for (int i = 0; i < (int)a.c.size(); ++i) {
    int k = a.val + i;
    if (k == -1) {
      if (!is_zero(a.c[i]))
        throw NonLogPole("antiderivative of a residue term (order -1) requested");
      r.c[i] = R{};
    } else {
      r.c[i] = qscale(Rat(1) / Rat(k + 1), a.c[i]);
    }
  }
  r.normalize();
  return r;
}

// Coefficientwise equality on the joint reliable window.
template <class R>
bool ls_eq(const LSer<R>& a, const LSer<R>& b) {
  int t = std::min(a.trunc, b.trunc);
  int lo = std::min(a.ord(), b.ord());
  if (lo > t) return true;
  // beyond both tops every reliable coefficient is zero on both sides
  int hi = lo - 1;
  if (!a.zero()) hi = std::max(hi, a.top());
  if (!b.zero()) hi = std::max(hi, b.top());
  hi = std::min(hi, t);
  for (int k = lo; k <= hi; ++k) {
    R x = (k >= a.val && k <= a.top()) ? a.c[k - a.val] : R{};
    R y = (k >= b.val && k <= b.top()) ? b.c[k - b.val] : R{};
    if (!(x == y)) return false;
  }
  return true;
}

// Evaluate a finite (exact) Laurent polynomial at a nonzero rational.
template <class R>
R ls_eval(const LSer<R>& a, const Rat& z) {
  if (!a.exact())
    throw InsufficientPrecision("evaluating a non-exact truncated series");
  if (is_zero(z) && a.val < 0 && !a.zero())
    throw DivisionByZero("evaluating a Laurent polynomial with a pole at 0");
  R acc{};
  for (int i = 0; i < (int)a.c.size(); ++i)
    acc = acc + qscale(rat_pow(z, a.val + i), a.c[i]);
  return acc;
}

using LaurentSeries = LSer<Rat>;

// Reciprocal of a Laurent series over Q with nonzero leading coefficient.
LaurentSeries ls_inv(const LaurentSeries& a);

// Sparse polynomial in one formal symbol (log pi, log sigma, log z, ...)
// with coefficients in R. Doubles as the value ring Q[L].
template <class R>
struct LogPoly {
  std::map<int, R> t;  // power of the symbol -> coefficient

  LogPoly() = default;
  // constant, so LogPoly can serve as a tensor coefficient ring
  LogPoly(int v) {
    if (v != 0) t.emplace(0, R(v));
  }
  static LogPoly of(R r, int pow = 0) {
    LogPoly p;
    if (!is_zero(r)) p.t.emplace(pow, std::move(r));
    return p;
  }
  void strip() {
    for (auto it = t.begin(); it != t.end();)
      it = is_zero(it->second) ? t.erase(it) : std::next(it);
  }
  R coeff(int pow) const {
    auto it = t.find(pow);
    return it == t.end() ? R{} : it->second;
  }
  bool operator==(const LogPoly& o) const { return t == o.t; }
};

template <class R>
bool is_zero(const LogPoly<R>& p) {
  return p.t.empty();
}

template <class R>
LogPoly<R> operator+(const LogPoly<R>& a, const LogPoly<R>& b) {
  LogPoly<R> r = a;
  for (auto& [k, v] : b.t) {
    auto it = r.t.find(k);
    if (it == r.t.end())
      r.t.emplace(k, v);
    else
      it->second = it->second + v;
  }
  r.strip();
  return r;
}

template <class R>
LogPoly<R> operator-(const LogPoly<R>& a) {
  LogPoly<R> r = a;
  for (auto& [k, v] : r.t) v = -v;
  return r;
}

template <class R>
LogPoly<R> operator-(const LogPoly<R>& a, const LogPoly<R>& b) {
  return a + (-b);
}

template <class R>
LogPoly<R> operator*(const LogPoly<R>& a, const LogPoly<R>& b) {
  LogPoly<R> r;
  for (auto& [i, u] : a.t)
    for (auto& [j, v] : b.t) {
      R p = u * v;
      auto it = r.t.find(i + j);
      if (it == r.t.end())
        r.t.emplace(i + j, std::move(p));
      else
        it->second = it->second + p;
    }
  r.strip();
  return r;
}

template <class R>
LogPoly<R> qscale(const Rat& s, const LogPoly<R>& a) {
  LogPoly<R> r = a;
  for (auto& [k, v] : r.t) v = qscale(s, v);
  r.strip();
  return r;
}

template <class R>
LSer<R> qscale(const Rat& s, const LSer<R>& a) {
  return ls_qscale(s, a);
}

// Let LSer participate as a coefficient ring (needed for nested series).
template <class R>
LSer<R> operator+(const LSer<R>& a, const LSer<R>& b) {
  return ls_add(a, b);
}
template <class R>
LSer<R> operator-(const LSer<R>& a, const LSer<R>& b) {
  return ls_sub(a, b);
}
template <class R>
LSer<R> operator-(const LSer<R>& a) {
  return ls_neg(a);
}
template <class R>
LSer<R> operator*(const LSer<R>& a, const LSer<R>& b) {
  return ls_mul(a, b);
}
template <class R>
bool operator==(const LSer<R>& a, const LSer<R>& b) {
  return ls_eq(a, b);
}

}  // namespace uam
