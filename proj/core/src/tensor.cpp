#include "uam/tensor.hpp"

namespace uam {

std::string bracket_str(const BracketWord& b) {
  if (b.is_leaf()) return "A" + std::to_string(b.letter);
  return "[" + bracket_str(*b.l) + "," + bracket_str(*b.r) + "]";
}

namespace {
BracketWord parse_at(const std::string& s, size_t& i) {
  if (i >= s.size()) throw BadLetter("unexpected end of bracket expression");
  if (s[i] == '[') {
    ++i;
    BracketWord l = parse_at(s, i);
    if (i >= s.size() || s[i] != ',') throw BadLetter("expected ',' in bracket expression");
    ++i;
    BracketWord r = parse_at(s, i);
    if (i >= s.size() || s[i] != ']') throw BadLetter("expected ']' in bracket expression");
    ++i;
    return BracketWord::pair(std::move(l), std::move(r));
  }
  if (s[i] == 'A') {
    size_t j = i + 1;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw BadLetter("expected letter index after 'A'");
    int letter = std::stoi(s.substr(i + 1, j - i - 1));
    i = j;
    return BracketWord::leaf(letter);
  }
  throw BadLetter(std::string("unexpected character '") + s[i] + "' in bracket expression");
}
}  // namespace

BracketWord bracket_parse(const std::string& s) {
  size_t i = 0;
  BracketWord b = parse_at(s, i);
  if (i != s.size()) throw BadLetter("trailing characters in bracket expression");
  return b;
}

std::vector<std::vector<int>> lyndon_words(int n, int q) {
  // Duval's generation, lexicographic order overall
  std::vector<std::vector<int>> out;
  std::vector<int> w{0};
  while (!w.empty()) {
    if ((int)w.size() <= n) out.push_back(w);
    int k = (int)w.size();
    while ((int)w.size() < n) w.push_back(w[(int)w.size() - k]);
    while (!w.empty() && w.back() == q - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  // group by length, keep lexicographic order inside each length
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

BracketWord lyndon_bracketing(const std::vector<int>& w) {
  if (w.size() == 1) return BracketWord::leaf(w[0]);
  // standard factorization w = uv, v the longest proper suffix that is Lyndon
  auto is_lyndon = [](const std::vector<int>& s) {
    for (size_t i = 1; i < s.size(); ++i) {
      std::vector<int> rot(s.begin() + i, s.end());
      rot.insert(rot.end(), s.begin(), s.begin() + i);
      if (!(s < rot)) return false;
    }
    return true;
  };
  for (size_t split = 1; split < w.size(); ++split) {
    std::vector<int> v(w.begin() + split, w.end());
    if (is_lyndon(v)) {
      std::vector<int> u(w.begin(), w.begin() + split);
      return BracketWord::pair(lyndon_bracketing(u), lyndon_bracketing(v));
    }
  }
  throw InvalidInput("not a Lyndon word");
}

}  // namespace uam
