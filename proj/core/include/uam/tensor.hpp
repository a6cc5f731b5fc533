#pragma once
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "uam/series.hpp"
#include "uam/word.hpp"

namespace uam {

// Element of the level-n truncation R_n = (tensor algebra on A_0..A_{q-1})
// modulo words of length > n, with coefficients in a commutative ring R.
// The concatenation product makes it the universal enveloping truncation;
// the unshuffle coproduct makes the letters primitive.
template <class R>
struct TensorElem {
  int n = 0;  // truncation level
  int q = 2;  // alphabet size (2g)
  std::map<WordKey, R> t;

  static TensorElem unit(int n_, int q_) {  // requires R constructible from int
    TensorElem e{n_, q_, {}};
    e.t.emplace(WordKey{0, 1}, R{1});
    return e;
  }

  void strip() {
    for (auto it = t.begin(); it != t.end();)
      it = is_zero(it->second) ? t.erase(it) : std::next(it);
  }
  R coeff(const WordKey& w) const {
    auto it = t.find(w);
    return it == t.end() ? R{} : it->second;
  }
  bool zero() const { return t.empty(); }
  bool operator==(const TensorElem& o) const { return n == o.n && q == o.q && t == o.t; }
};

template <class R>
void te_check_compat(const TensorElem<R>& a, const TensorElem<R>& b) {
  if (a.q != b.q)
    throw AlphabetMismatch("alphabet sizes " + std::to_string(a.q) + " and " + std::to_string(b.q));
}

template <class R>
TensorElem<R> te_add(const TensorElem<R>& a, const TensorElem<R>& b) {
  te_check_compat(a, b);
  TensorElem<R> r = a;
  r.n = std::min(a.n, b.n);
  for (auto& [w, v] : b.t) {
    auto it = r.t.find(w);
    if (it == r.t.end())
      r.t.emplace(w, v);
    else
      it->second = it->second + v;
  }
  for (auto it = r.t.begin(); it != r.t.end();)
    it = (it->first.len > r.n) ? r.t.erase(it) : std::next(it);
  r.strip();
  return r;
}

template <class R>
TensorElem<R> te_neg(const TensorElem<R>& a) {
  TensorElem<R> r = a;
  for (auto& [w, v] : r.t) v = -v;
  return r;
}

template <class R>
TensorElem<R> te_sub(const TensorElem<R>& a, const TensorElem<R>& b) {
  return te_add(a, te_neg(b));
}

template <class R>
TensorElem<R> te_qscale(const Rat& s, const TensorElem<R>& a) {
  TensorElem<R> r = a;
  for (auto& [w, v] : r.t) v = qscale(s, v);
  r.strip();
  return r;
}

template <class R>
TensorElem<R> te_rscale(const R& s, const TensorElem<R>& a) {
  TensorElem<R> r = a;
  for (auto& [w, v] : r.t) v = v * s;
  r.strip();
  return r;
}

// concatenation product
template <class R>
TensorElem<R> concat_mul(const TensorElem<R>& a, const TensorElem<R>& b) {
  te_check_compat(a, b);
  TensorElem<R> r;
  r.n = std::min(a.n, b.n);
  r.q = a.q;
  for (auto& [wa, va] : a.t)
    for (auto& [wb, vb] : b.t) {
      if (wa.len + wb.len > r.n) continue;
      WordKey w = concat(wa, wb, r.q);
      R p = va * vb;
      auto it = r.t.find(w);
      if (it == r.t.end())
        r.t.emplace(w, std::move(p));
      else
        it->second = it->second + p;
    }
  r.strip();
  return r;
}

namespace detail {
// all interleavings of two letter sequences
inline void shuffle_words(const std::vector<int>& u, const std::vector<int>& v, size_t i, size_t j,
                          std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (i == u.size() && j == v.size()) {
    out.push_back(acc);
    return;
  }
  if (i < u.size()) {
    acc.push_back(u[i]);
    shuffle_words(u, v, i + 1, j, acc, out);
    acc.pop_back();
  }
  if (j < v.size()) {
    acc.push_back(v[j]);
    shuffle_words(u, v, i, j + 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

template <class R>
TensorElem<R> shuffle_mul(const TensorElem<R>& a, const TensorElem<R>& b) {
  te_check_compat(a, b);
  TensorElem<R> r;
  r.n = std::min(a.n, b.n);
  r.q = a.q;
  for (auto& [wa, va] : a.t)
    for (auto& [wb, vb] : b.t) {
      if (wa.len + wb.len > r.n) continue;
      auto lu = word_letters(wa, r.q), lv = word_letters(wb, r.q);
      std::vector<std::vector<int>> words;
      std::vector<int> acc;
      detail::shuffle_words(lu, lv, 0, 0, acc, words);
      R p = va * vb;
      for (auto& w : words) {
        WordKey k = word_of_letters(w, r.q);
        auto it = r.t.find(k);
        if (it == r.t.end())
          r.t.emplace(k, p);
        else
          it->second = it->second + p;
      }
    }
  r.strip();
  return r;
}

// Element of the truncated tensor square (R_n ox R_n restricted to pairs
// of total length <= n), the codomain of the coproduct.
template <class R>
struct TensorSquare {
  int n = 0;
  int q = 2;
  std::map<std::pair<WordKey, WordKey>, R> t;

  void strip() {
    for (auto it = t.begin(); it != t.end();)
      it = is_zero(it->second) ? t.erase(it) : std::next(it);
  }
  bool operator==(const TensorSquare& o) const { return n == o.n && q == o.q && t == o.t; }
};

template <class R>
TensorSquare<R> ts_add(const TensorSquare<R>& a, const TensorSquare<R>& b) {
  TensorSquare<R> r = a;
  for (auto& [w, v] : b.t) {
    auto it = r.t.find(w);
    if (it == r.t.end())
      r.t.emplace(w, v);
    else
      it->second = it->second + v;
  }
  r.strip();
  return r;
}

template <class R>
TensorSquare<R> ts_neg(const TensorSquare<R>& a) {
  TensorSquare<R> r = a;
  for (auto& [w, v] : r.t) v = -v;
  return r;
}

template <class R>
TensorSquare<R> ts_outer(const TensorElem<R>& a, const TensorElem<R>& b) {
  te_check_compat(a, b);
  TensorSquare<R> r;
  r.n = std::min(a.n, b.n);
  r.q = a.q;
  for (auto& [wa, va] : a.t)
    for (auto& [wb, vb] : b.t) {
      if (wa.len + wb.len > r.n) continue;
      R p = va * vb;
      if (!is_zero(p)) r.t.emplace(std::make_pair(wa, wb), std::move(p));
    }
  return r;
}

// componentwise (a ox b)(c ox d) = ac ox bd
template <class R>
TensorSquare<R> ts_mul(const TensorSquare<R>& a, const TensorSquare<R>& b) {
  TensorSquare<R> r;
  r.n = std::min(a.n, b.n);
  r.q = a.q;
  for (auto& [wa, va] : a.t)
    for (auto& [wb, vb] : b.t) {
      if (wa.first.len + wb.first.len + wa.second.len + wb.second.len > r.n) continue;
      auto key = std::make_pair(concat(wa.first, wb.first, r.q), concat(wa.second, wb.second, r.q));
      R p = va * vb;
      auto it = r.t.find(key);
      if (it == r.t.end())
        r.t.emplace(key, std::move(p));
      else
        it->second = it->second + p;
    }
  r.strip();
  return r;
}

// Unshuffle coproduct: Delta(w) = sum over subsets S of positions of
// (letters in S) ox (letters not in S); the algebra map extending
// Delta(A_i) = A_i ox 1 + 1 ox A_i.
template <class R>
TensorSquare<R> coproduct(const TensorElem<R>& a) {
  TensorSquare<R> r;
  r.n = a.n;
  r.q = a.q;
  for (auto& [w, v] : a.t) {
    auto letters = word_letters(w, a.q);
    int l = w.len;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> left, right;
      for (int i = 0; i < l; ++i)
        ((mask >> i) & 1 ? left : right).push_back(letters[i]);
      auto key = std::make_pair(word_of_letters(left, a.q), word_of_letters(right, a.q));
      auto it = r.t.find(key);
      if (it == r.t.end())
        r.t.emplace(key, v);
      else
        it->second = it->second + v;
    }
  }
  r.strip();
  return r;
}

template <class R>
bool is_primitive(const TensorElem<R>& a) {
  TensorElem<R> one = TensorElem<R>::unit(a.n, a.q);
  TensorSquare<R> want = ts_add(ts_outer(a, one), ts_outer(one, a));
  return coproduct(a) == want;
}

template <class R>
bool is_grouplike(const TensorElem<R>& a) {
  if (!(a.coeff(WordKey{0, 1}) == R{1})) return false;
  return coproduct(a) == ts_outer(a, a);
}

// exp of an element with zero constant term (else BadConstantTerm)
template <class R>
TensorElem<R> exp_trunc(const TensorElem<R>& a) {
  if (!is_zero(a.coeff(WordKey{0, 1})))
    throw BadConstantTerm("exp needs a zero constant term");
  TensorElem<R> acc = TensorElem<R>::unit(a.n, a.q);
  TensorElem<R> pw = TensorElem<R>::unit(a.n, a.q);
  Rat fact = 1;
  for (int k = 1; k <= a.n; ++k) {
    pw = concat_mul(pw, a);
    if (pw.zero()) break;
    fact *= k;
    acc = te_add(acc, te_qscale(1 / fact, pw));
  }
  return acc;
}

// log(1+u) = sum (-1)^(k+1) u^k / k for a with constant term exactly 1
template <class R>
TensorElem<R> log_trunc(const TensorElem<R>& a) {
  if (!(a.coeff(WordKey{0, 1}) == R{1}))
    throw BadConstantTerm("log needs constant term 1");
  TensorElem<R> u = te_sub(a, TensorElem<R>::unit(a.n, a.q));
  TensorElem<R> acc{a.n, a.q, {}};
  TensorElem<R> pw = TensorElem<R>::unit(a.n, a.q);
  for (int k = 1; k <= a.n; ++k) {
    pw = concat_mul(pw, u);
    if (pw.zero()) break;
    acc = te_add(acc, te_qscale(Rat((k % 2) ? 1 : -1) / Rat(k), pw));
  }
  return acc;
}

// ---- Lie bracket words ----------------------------------------------------

// Immutable binary bracket tree; leaves are letters.
struct BracketWord {
  int letter = -1;
  std::shared_ptr<const BracketWord> l, r;

  static BracketWord leaf(int i) { return BracketWord{i, nullptr, nullptr}; }
  static BracketWord pair(BracketWord a, BracketWord b) {
    return BracketWord{-1, std::make_shared<const BracketWord>(std::move(a)),
                       std::make_shared<const BracketWord>(std::move(b))};
  }
  bool is_leaf() const { return letter >= 0; }
};

std::string bracket_str(const BracketWord& b);
BracketWord bracket_parse(const std::string& s);  // BadLetter on junk

template <class R>
TensorElem<R> bracket_expand(const BracketWord& b, int n, int q) {
  if (b.is_leaf()) {
    if (b.letter >= q) throw BadLetter("letter A" + std::to_string(b.letter) + " outside alphabet");
    TensorElem<R> e{n, q, {}};
    if (n >= 1) e.t.emplace(WordKey{1, b.letter + 1}, R{1});
    return e;
  }
  TensorElem<R> u = bracket_expand<R>(*b.l, n, q), v = bracket_expand<R>(*b.r, n, q);
  return te_sub(concat_mul(u, v), concat_mul(v, u));
}

// Formal K-combination of bracket words, e.g. A1 + 2[[A0,A1],A1].
template <class R>
struct LieExpr {
  int n = 0;
  int q = 2;
  std::vector<std::pair<BracketWord, R>> terms;
};

template <class R>
TensorElem<R> lie_expand(const LieExpr<R>& e) {
  TensorElem<R> out{e.n, e.q, {}};
  for (const auto& [b, c] : e.terms)
    out = te_add(out, te_rscale(c, bracket_expand<R>(b, e.n, e.q)));
  return out;
}

// Lyndon words of length 1..n over 0..q-1, lexicographically increasing
// within each length; standard (right) bracketing gives the Lie basis.
std::vector<std::vector<int>> lyndon_words(int n, int q);
BracketWord lyndon_bracketing(const std::vector<int>& w);

// Write a primitive element in the Lyndon bracket basis. Throws
// InvalidInput if the element is not primitive (residual does not clear).
template <class R>
std::vector<std::pair<BracketWord, R>> lie_coords(const TensorElem<R>& a) {
  std::vector<std::pair<BracketWord, R>> out;
  TensorElem<R> res = a;
  for (int d = 1; d <= a.n; ++d) {
    for (auto& lw : lyndon_words(a.n, a.q)) {
      if ((int)lw.size() != d) continue;
      WordKey k = word_of_letters(lw, a.q);
      R c = res.coeff(k);
      if (is_zero(c)) continue;
      BracketWord b = lyndon_bracketing(lw);
      res = te_sub(res, te_rscale(c, bracket_expand<R>(b, a.n, a.q)));
      out.emplace_back(std::move(b), std::move(c));
    }
    for (auto& [w, v] : res.t)
      if (w.len == d && !is_zero(v))
        throw InvalidInput("element is not primitive: word " + word_string(w, a.q) +
                           " survives Lyndon reduction");
  }
  return out;
}

}  // namespace uam
