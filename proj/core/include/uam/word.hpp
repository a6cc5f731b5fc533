#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "uam/errors.hpp"

namespace uam {

// Words over the alphabet A_0..A_{q-1} (q = 2g). Words of length l are ranked
// 1..q^l in lexicographic order: rank = 1 + sum letter_j * q^(l-1-j).
using Rank = long long;

Rank q_pow(int q, int e);  // OutOfRange on negative e or overflow

struct WordKey {
  int len = 0;
  Rank rank = 1;  // 1..q^len
  auto operator<=>(const WordKey&) const = default;
};

// psi/phi index bookkeeping for splitting words into prefix and suffix:
// for a word w of any length L > j, psi(rank,0,j,q) is the rank of the
// length L-j prefix and phi(rank,0,j,q)+1 the rank of the length j suffix.
Rank psi(Rank r, int i, int j, int q);
Rank phi(Rank r, int i, int j, int q);
// tau(i,j,p,q) = 1 when the length p suffix of word i is word j.
int tau(Rank i, Rank j, int p, int q);

std::vector<int> word_letters(const WordKey& w, int q);
WordKey word_of_letters(const std::vector<int>& letters, int q);
std::string word_string(const WordKey& w, int q);      // e.g. "A0A1A1"
WordKey word_of_string(const std::string& s, int q);   // BadLetter on junk

inline WordKey concat(const WordKey& a, const WordKey& b, int q) {
  return {a.len + b.len, (a.rank - 1) * q_pow(q, b.len) + b.rank};
}

// Position (1-based) of w inside the level-n basis B_n, which lists words of
// length n first, then n-1, ..., then the empty word.
Rank basis_pos(const WordKey& w, int n, int q);
Rank basis_dim(int n, int q);  // (q^(n+1)-1)/(q-1)
WordKey basis_word(Rank pos, int n, int q);  // inverse of basis_pos

}  // namespace uam
