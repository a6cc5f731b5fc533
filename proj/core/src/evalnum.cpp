#include "uam/evalnum.hpp"

#include <sstream>

namespace uam {

namespace {

using SS = LSer<LogVal>;

LogFn lf_const(const Rat& c) { return LogFn::of(SS::monomial(LogVal::of(c), 0)); }

// c * t^p, no log part
LogFn lf_mono(const LogVal& c, int p) { return LogFn::of(SS::monomial(c, p)); }

LogFn lf_scale(const LogVal& s, const LogFn& a) {
  LogFn r;
  for (auto& [q, ser] : a.t) {
    SS sc = ser;
    for (auto& c : sc.c) c = s * c;
    sc.normalize();
    if (!sc.zero()) r.t.emplace(q, std::move(sc));
  }
  return r;
}

// antiderivative of c * t^p log(t)^q with zero integration constant:
//   p = -1: c log(t)^{q+1} / (q+1)
//   else:   c t^{p+1} sum_{j=0..q} (-1)^j q!/(q-j)! / (p+1)^{j+1} log(t)^{q-j}
LogFn term_antider(const LogVal& c, int p, int q) {
  LogFn out;
  if (p == -1) {
    out = out + LogFn::of(SS::monomial(qscale(Rat(1, q + 1), c), 0), q + 1);
    return out;
  }
  LogVal cur = qscale(Rat(1) / Rat(p + 1), c);
  for (int qq = q;; --qq) {
    out = out + LogFn::of(SS::monomial(cur, p + 1), qq);
    if (qq == 0) break;
    cur = qscale(Rat(-qq) / Rat(p + 1), cur);
  }
  return out;
}

LogFn lf_antider(const LogFn& a) {
  LogFn r;
  for (auto& [q, ser] : a.t)
    for (int i = 0; i < (int)ser.c.size(); ++i)
      if (!is_zero(ser.c[i])) r = r + term_antider(ser.c[i], ser.val + i, q);
  return r;
}

// t := z, log t := the symbol L (by convention the branch value of log z)
LogVal lf_eval(const LogFn& a, const Rat& z) {
  LogVal out;
  for (auto& [q, ser] : a.t) {
    LogVal s;
    for (int i = 0; i < (int)ser.c.size(); ++i)
      s = s + qscale(rat_pow(z, ser.val + i), ser.c[i]);
    out = out + s * LogVal::of(Rat(1), q);
  }
  return out;
}

SS coerce_exact(const LaurentSeries& f) {
  SS r;
  r.val = f.val;
  r.trunc = EXACT_ORD;  // a truncation is reinterpreted as a finite form
  r.c.reserve(f.c.size());
  for (auto& c : f.c) r.c.push_back(LogVal::of(c));
  r.normalize();
  return r;
}

}  // namespace

Rat eval_log(const LogVal& v, const Rat& log_value) {
  Rat out = 0;
  for (auto& [pow, c] : v.t) {
    if (pow < 0) throw InvalidInput("negative power of the log symbol");
    out += c * rat_pow(log_value, pow);
  }
  return out;
}

DiskPoint disk_point(const Rat& z) {
  if (is_zero(z)) throw InvalidInput("z = 0 is the puncture, not a disk point");
  return DiskPoint{z};
}

LogVal LogColeman::regularized() const {
  auto it = f.t.find(0);
  if (it == f.t.end()) return LogVal{};
  const SS& a0 = it->second;
  return a0.coeff(0);
}

LogColeman formal_iterated_integral(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                                    bool allow_higher_poles) {
  if (is_zero(z.z)) throw InvalidInput("z = 0 is the puncture, not a disk point");
  for (size_t i = 0; i < forms.size(); ++i) {
    const LaurentSeries& f = forms[i];
    if (!f.exact() && f.trunc < -1)
      throw PrecisionExhausted("form " + std::to_string(i) +
                               " is reliable only below order -1; its residue is unknown");
    if (!allow_higher_poles && !f.zero() && f.ord() < -1)
      throw NonLogPole("form " + std::to_string(i) + " has a pole of order " +
                       std::to_string(-f.ord()));
  }

  // state: sum of pure tensors (function of the current variable) x
  // (function of sigma), processed innermost form first
  std::vector<std::pair<LogFn, LogFn>> state;
  state.emplace_back(lf_const(1), lf_const(1));
  for (auto it = forms.rbegin(); it != forms.rend(); ++it) {
    LogFn f = LogFn::of(coerce_exact(*it));
    std::vector<std::pair<LogFn, LogFn>> next;
    next.reserve(2 * state.size());
    for (auto& [T, Sg] : state) {
      LogFn G = lf_antider(f * T);
      // int_sigma^t = G(t) - G(sigma)
      next.emplace_back(G, Sg);
      next.emplace_back(lf_const(1), lf_scale(LogVal::of(-1), G * Sg));
    }
    state = std::move(next);
  }

  LogColeman out;
  for (auto& [T, Sg] : state) out.f = out.f + lf_scale(lf_eval(T, z.z), Sg);
  return out;
}

LogVal tangential_value(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                        bool allow_higher_poles) {
  return formal_iterated_integral(forms, z, allow_higher_poles).regularized();
}

Rat tangential_value(const std::vector<LaurentSeries>& forms, const DiskPoint& z,
                     const Rat& log_value) {
  return eval_log(tangential_value(forms, z), log_value);
}

Rat MapOracle::prefix(const std::vector<std::string>& word) const {
  std::string key;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) key += ' ';
    key += word[i];
  }
  auto it = table.find(key);
  if (it == table.end()) throw OracleMissingValue("no oracle value for the word \"" + key + "\"");
  return it->second;
}

LogVal compose_paths(const std::vector<std::pair<std::string, LaurentSeries>>& forms,
                     const DiskPoint& y, const IntegralOracle& oracle) {
  int n = (int)forms.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto& [l, s] : forms) labels.push_back(l);

  // spot-check the shuffle relations available inside one prefix chain:
  // a constant run w, w, .., w of length j forces j! * I_j = (I_1)^j
  if (n >= 2 && labels[1] == labels[0]) {
    Rat i1 = oracle.prefix({labels[0]});
    Rat fact = 1, pw = i1;
    for (int j = 2; j <= n && labels[j - 1] == labels[0]; ++j) {
      fact *= j;
      pw *= i1;
      Rat ij = oracle.prefix(std::vector<std::string>(labels.begin(), labels.begin() + j));
      if (fact * ij != pw)
        throw InvalidInput("oracle values violate the shuffle relation on the prefix of length " +
                           std::to_string(j));
    }
  }

  LogVal total;
  for (int i = 0; i <= n; ++i) {
    Rat head = (i == 0) ? Rat(1)
                        : oracle.prefix(std::vector<std::string>(labels.begin(), labels.begin() + i));
    std::vector<LaurentSeries> tail;
    tail.reserve(n - i);
    for (int j = i; j < n; ++j) tail.push_back(forms[j].second);
    total = total + qscale(head, tangential_value(tail, y));
  }
  return total;
}

LogVal eval_tangential(const IIPoly& p, const FormRegistry& reg, const Expander& ex,
                       const DiskPoint& z) {
  std::vector<LaurentSeries> cache(reg.size());
  std::vector<bool> have(reg.size(), false);
  auto series_of = [&](int i) -> const LaurentSeries& {
    if (i < 0 || i >= reg.size()) throw OutOfRange("registry index " + std::to_string(i));
    if (!have[i]) {
      cache[i] = ex.expand_form(reg.form(i));
      have[i] = true;
    }
    return cache[i];
  };
  LogVal out;
  for (auto& [mono, coeff] : p.t) {
    LogVal term = LogVal::of(Rat(1));
    for (const IIWord& w : mono) {
      std::vector<LaurentSeries> forms;
      forms.reserve(w.size());
      for (int i : w) forms.push_back(series_of(i));
      term = term * tangential_value(forms, z);
    }
    out = out + qscale(coeff, term);
  }
  return out;
}

}  // namespace uam
