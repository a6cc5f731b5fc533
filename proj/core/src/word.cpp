#include "uam/word.hpp"

#include <limits>

namespace uam {

Rank q_pow(int q, int e) {
  if (q < 2) throw OutOfRange("alphabet size must be at least 2");
  if (e < 0) throw OutOfRange("negative exponent in rank arithmetic");
  Rank acc = 1;
  for (int i = 0; i < e; ++i) {
    if (acc > std::numeric_limits<Rank>::max() / q) throw OutOfRange("rank overflow");
    acc *= q;
  }
  return acc;
}

Rank psi(Rank r, int i, int j, int q) {
  if (r < 1) throw OutOfRange("psi: rank must be positive");
  if (i < 0 || j < 0) throw OutOfRange("psi: negative index");
  if (i <= j) {
    Rank d = q_pow(q, j - i);
    return (r + d - 1) / d;  // floor(r/d) plus 1 unless d divides r
  }
  Rank m = q_pow(q, i - j);
  if (r > std::numeric_limits<Rank>::max() / m) throw OutOfRange("psi: rank overflow");
  return r * m;
}

Rank phi(Rank r, int i, int j, int q) {
  return (r - 1) * q_pow(q, i) - (psi(r, i, j, q) - 1) * q_pow(q, j);
}

int tau(Rank i, Rank j, int p, int q) {
  if (j < 1) throw OutOfRange("tau: rank must be positive");
  return i == j + (psi(i, 0, p, q) - 1) * q_pow(q, p) ? 1 : 0;
}

std::vector<int> word_letters(const WordKey& w, int q) {
  if (w.len < 0 || w.rank < 1 || w.rank > q_pow(q, w.len))
    throw OutOfRange("word rank out of range for its length");
  std::vector<int> out(w.len);
  Rank r = w.rank - 1;
  for (int pos = w.len - 1; pos >= 0; --pos) {
    out[pos] = static_cast<int>(r % q);
    r /= q;
  }
  return out;
}

WordKey word_of_letters(const std::vector<int>& letters, int q) {
  Rank r = 0;
  for (int l : letters) {
    if (l < 0 || l >= q)
      throw BadLetter("letter index " + std::to_string(l) + " outside alphabet of size " +
                      std::to_string(q));
    r = r * q + l;
  }
  return {static_cast<int>(letters.size()), r + 1};
}

std::string word_string(const WordKey& w, int q) {
  if (w.len == 0) return "1";
  std::string s;
  for (int l : word_letters(w, q)) s += "A" + std::to_string(l);
  return s;
}

WordKey word_of_string(const std::string& s, int q) {
  if (s == "1" || s.empty()) return {0, 1};
  std::vector<int> letters;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'A') throw BadLetter("expected 'A<digit>' at position " + std::to_string(i));
    size_t j = i + 1;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw BadLetter("missing letter index at position " + std::to_string(i));
    letters.push_back(std::stoi(s.substr(i + 1, j - i - 1)));
    i = j;
  }
  return word_of_letters(letters, q);
}

Rank basis_pos(const WordKey& w, int n, int q) {
  if (w.len > n) throw OutOfRange("word longer than basis level");
  Rank pos = w.rank;
  for (int s = w.len + 1; s <= n; ++s) pos += q_pow(q, s);
  return pos;
}

Rank basis_dim(int n, int q) {
  Rank d = 0;
  for (int s = 0; s <= n; ++s) d += q_pow(q, s);
  return d;
}

WordKey basis_word(Rank pos, int n, int q) {
  if (pos < 1 || pos > basis_dim(n, q)) throw OutOfRange("basis position out of range");
  for (int len = n; len >= 0; --len) {
    Rank block = q_pow(q, len);
    if (pos <= block) return {len, pos};
    pos -= block;
  }
  throw OutOfRange("unreachable basis position");
}

}  // namespace uam
