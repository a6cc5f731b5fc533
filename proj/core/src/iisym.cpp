#include "uam/iisym.hpp"

#include <algorithm>

#include "uam/errors.hpp"
#include "uam/tensor.hpp"

namespace uam {

IIPoly ii_sym(const IIWord& w) {
  IIPoly p;
  if (w.empty())
    p.t.emplace(IIMono{}, Rat(1));
  else
    p.t.emplace(IIMono{w}, Rat(1));
  return p;
}

static void ii_acc(IIPoly& p, const IIMono& m, const Rat& c) {
  auto it = p.t.find(m);
  if (it == p.t.end()) {
    if (!is_zero(c)) p.t.emplace(m, c);
    return;
  }
  it->second += c;
  if (is_zero(it->second)) p.t.erase(it);
}

IIPoly qscale(const Rat& s, const IIPoly& p) {
  IIPoly r;
  if (is_zero(s)) return r;
  r = p;
  for (auto& [m, c] : r.t) c *= s;
  return r;
}

IIPoly operator+(const IIPoly& a, const IIPoly& b) {
  IIPoly r = a;
  for (auto& [m, c] : b.t) ii_acc(r, m, c);
  return r;
}

IIPoly operator-(const IIPoly& a) {
  IIPoly r = a;
  for (auto& [m, c] : r.t) c = -c;
  return r;
}

IIPoly operator-(const IIPoly& a, const IIPoly& b) { return a + (-b); }

IIPoly ii_formal_mul(const IIPoly& a, const IIPoly& b) {
  IIPoly r;
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) {
      IIMono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      ii_acc(r, m, ca * cb);
    }
  return r;
}

// multiset of words coeffs of the shuffle of acc (as a word map) with w
static std::map<IIWord, Rat> shuffle_step(const std::map<IIWord, Rat>& acc, const IIWord& w) {
  std::map<IIWord, Rat> next;
  for (auto& [u, c] : acc) {
    std::vector<std::vector<int>> outs;
    std::vector<int> tmp;
    detail::shuffle_words(u, w, 0, 0, tmp, outs);
    for (auto& o : outs) next[o] += c;
  }
  return next;
}

IIPoly shuffle_normalize(const IIPoly& p) {
  IIPoly r;
  for (auto& [m, c] : p.t) {
    if (m.size() <= 1) {
      ii_acc(r, m, c);
      continue;
    }
    std::map<IIWord, Rat> acc{{IIWord{}, c}};
    for (const IIWord& f : m) acc = shuffle_step(acc, f);
    for (auto& [w, v] : acc) ii_acc(r, w.empty() ? IIMono{} : IIMono{w}, v);
  }
  return r;
}

IIPoly operator*(const IIPoly& a, const IIPoly& b) {
  return shuffle_normalize(ii_formal_mul(a, b));
}

IIPoly operator*(const IIPoly& a, const Rat& s) { return qscale(s, a); }

bool ii_normal(const IIPoly& p) {
  for (auto& [m, c] : p.t)
    if (m.size() > 1) return false;
  return true;
}

IIPoly ii_prepend(int form, const IIPoly& p) {
  IIPoly src = ii_normal(p) ? p : shuffle_normalize(p);
  IIPoly r;
  for (auto& [m, c] : src.t) {
    IIWord w{form};
    if (!m.empty()) w.insert(w.end(), m[0].begin(), m[0].end());
    ii_acc(r, IIMono{w}, c);
  }
  return r;
}

int FormRegistry::add(const std::string& label, const OneForm& w) {
  if (index_of(label) >= 0) throw InvalidInput("form label '" + label + "' already registered");
  forms.emplace_back(label, w);
  return (int)forms.size() - 1;
}

int FormRegistry::index_of(const std::string& label) const {
  for (int i = 0; i < (int)forms.size(); ++i)
    if (forms[i].first == label) return i;
  return -1;
}

const OneForm& FormRegistry::form(int i) const {
  if (i < 0 || i >= (int)forms.size()) throw OutOfRange("form index " + std::to_string(i));
  return forms[i].second;
}

const std::string& FormRegistry::label(int i) const {
  if (i < 0 || i >= (int)forms.size()) throw OutOfRange("form index " + std::to_string(i));
  return forms[i].first;
}

// w = s*v for a rational s: candidate from the leading coefficients of the
// first component nonzero in v, then exact verification
static bool fe_ratio(const FuncElem& w, const FuncElem& v, Rat& s) {
  if (v.zero()) return false;
  const RatFn* wc = nullptr;
  const RatFn* vc = nullptr;
  if (!v.a.zero()) {
    wc = &w.a;
    vc = &v.a;
  } else {
    wc = &w.b;
    vc = &v.b;
  }
  if (wc->zero()) return false;
  s = wc->num.lc() / vc->num.lc();
  return w == fe_scale(s, v);
}

std::pair<Rat, int> FormRegistry::resolve(const OneForm& w, const std::string& fallback_label) {
  if (w.zero()) throw ZeroInput("cannot resolve the zero form");
  for (int i = 0; i < (int)forms.size(); ++i) {
    Rat s;
    if (fe_ratio(w.u, forms[i].second.u, s)) return {s, i};
  }
  return {Rat(1), add(fallback_label, w)};
}

static std::string ii_sym_str(const IIWord& w, const FormRegistry& reg) {
  std::string s = "I(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += reg.label(w[i]);
  }
  return s + ")";
}

std::string ii_str(const IIPoly& p, const FormRegistry& reg) {
  if (p.t.empty()) return "0";
  std::string out;
  for (auto& [m, c] : p.t) {
    std::string body;
    for (auto& w : m) body += ii_sym_str(w, reg);
    Rat a = c < 0 ? Rat(-c) : c;
    std::string coeff = (a == 1 && !m.empty()) ? "" : rat_str(a) + (m.empty() ? "" : " ");
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    out += coeff + body;
  }
  return out;
}

}  // namespace uam
