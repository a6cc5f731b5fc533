#pragma once
#include <map>
#include <string>
#include <vector>

#include "uam/funcfield.hpp"
#include "uam/rational.hpp"

namespace uam {

// Symbolic iterated integrals. A symbol is a word of form indices (into a
// FormRegistry) standing for the iterated integral of those forms, in order,
// from the fixed basepoint; the empty word is the constant 1. Polynomials in
// symbols multiply by the shuffle product, so in normal form every monomial
// is a single symbol. ii_formal_mul builds unexpanded products of symbols;
// shuffle_normalize expands them and is idempotent.
using IIWord = std::vector<int>;
using IIMono = std::vector<IIWord>;  // formal product of symbols, factors sorted

struct IIPoly {
  std::map<IIMono, Rat> t;

  IIPoly() = default;
  IIPoly(int c) {
    if (c != 0) t.emplace(IIMono{}, Rat(c));
  }
  IIPoly(const Rat& c) {
    if (!uam::is_zero(c)) t.emplace(IIMono{}, c);
  }

  bool operator==(const IIPoly& o) const { return t == o.t; }
};

inline bool is_zero(const IIPoly& p) { return p.t.empty(); }

IIPoly ii_sym(const IIWord& w);  // one symbol, coefficient 1
IIPoly qscale(const Rat& s, const IIPoly& p);
IIPoly operator+(const IIPoly& a, const IIPoly& b);
IIPoly operator-(const IIPoly& a);
IIPoly operator-(const IIPoly& a, const IIPoly& b);
// shuffle product; the result is in normal form even if the operands are not
IIPoly operator*(const IIPoly& a, const IIPoly& b);
IIPoly operator*(const IIPoly& a, const Rat& s);

// product of polynomials with symbol products left unexpanded
IIPoly ii_formal_mul(const IIPoly& a, const IIPoly& b);
// expand every multi-symbol monomial through the shuffle product
IIPoly shuffle_normalize(const IIPoly& p);
// symbol-wise w -> (form w), normalizing first: the one-extra-integration map
IIPoly ii_prepend(int form, const IIPoly& p);
// true when no monomial has more than one factor
bool ii_normal(const IIPoly& p);

// Names for the one-forms appearing in iterated integrals, so symbol words
// stay readable and proportional forms share one index.
struct FormRegistry {
  std::vector<std::pair<std::string, OneForm>> forms;

  int size() const { return (int)forms.size(); }
  int add(const std::string& label, const OneForm& w);  // InvalidInput on reuse
  int index_of(const std::string& label) const;         // -1 when absent
  const OneForm& form(int i) const;
  const std::string& label(int i) const;
  // scalar s and index i with w = s * forms[i]; when no registered form is
  // proportional to w, registers it under fallback_label and returns (1, new)
  std::pair<Rat, int> resolve(const OneForm& w, const std::string& fallback_label);
};

std::string ii_str(const IIPoly& p, const FormRegistry& reg);

}  // namespace uam
