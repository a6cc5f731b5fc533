#include <random>

#include "doctest.h"
#include "uam/tensor.hpp"

using namespace uam;

namespace {

using TE = TensorElem<Rat>;

TE letter(int i, int n, int q) {
  TE e{n, q, {}};
  e.t.emplace(WordKey{1, i + 1}, Rat(1));
  return e;
}

TE rnd_elem(std::mt19937& rng, int n, int q, bool zero_const) {
  TE e{n, q, {}};
  for (int len = zero_const ? 1 : 0; len <= n; ++len)
    for (Rank r = 1; r <= q_pow(q, len); ++r)
      if (rng() % 3 == 0) {
        Rat c((long)(rng() % 9) - 4);
        if (!is_zero(c)) e.t.emplace(WordKey{len, r}, c);
      }
  return e;
}

}  // namespace

TEST_CASE("psi, phi, tau on pinned values") {
  CHECK(psi(3, 0, 1, 2) == 2);
  CHECK(psi(4, 0, 1, 2) == 2);
  CHECK(psi(1, 0, 1, 2) == 1);
  CHECK(psi(6, 0, 2, 2) == 2);
  CHECK(phi(3, 0, 1, 2) == 0);
  CHECK(phi(4, 0, 1, 2) == 1);
  CHECK(phi(6, 0, 2, 2) == 1);
  CHECK(psi(5, 2, 0, 2) == 20);  // i > j branch: r * q^(i-j)
  CHECK_THROWS_AS(psi(0, 0, 1, 2), OutOfRange);
  CHECK_THROWS_AS(q_pow(2, 63), OutOfRange);
  CHECK_THROWS_AS(q_pow(2, -1), OutOfRange);

  // tau(i,j,p,q) = 1 iff the length-p suffix of word i is word j
  CHECK(tau(4, 2, 1, 2) == 1);   // A1A1 ends in A1
  CHECK(tau(4, 1, 1, 2) == 0);   // A1A1 does not end in A0
  CHECK(tau(7, 3, 2, 2) == 1);   // A1A1A0 ends in A1A0
  CHECK(tau(16, 3, 2, 2) == 0);  // A1A1A1A1 does not end in A1A0
  for (int p = 3; p <= 6; ++p)
    for (int m = 1; m < p; ++m) CHECK(tau(q_pow(2, p), q_pow(2, m), m, 2) == 1);
}

TEST_CASE("psi/phi index shift laws") {
  // psi(r,i,j,2) = psi(r,i-1,j-1,2) and phi(r,i,j,2) = 2 phi(r,i-1,j-1,2)
  for (int j = 1; j <= 6; ++j)
    for (int i = 1; i <= j; ++i)
      for (Rank r = 1; r <= q_pow(2, j); ++r) {
        CHECK(psi(r, i, j, 2) == psi(r, i - 1, j - 1, 2));
        CHECK(phi(r, i, j, 2) == 2 * phi(r, i - 1, j - 1, 2));
      }
}

TEST_CASE("prefix/suffix splitting reassembles words") {
  std::mt19937 rng(99);
  for (int q : {2, 4})
    for (int it = 0; it < 100; ++it) {
      int len = 1 + (int)(rng() % 5);
      Rank r = 1 + (Rank)(rng() % q_pow(q, len));
      for (int j = 0; j <= len; ++j) {
        WordKey pre{len - j, psi(r, 0, j, q)};
        WordKey suf{j, phi(r, 0, j, q) + 1};
        CHECK(concat(pre, suf, q) == WordKey{len, r});
      }
    }
}

TEST_CASE("word strings and ranks") {
  CHECK(word_string(WordKey{2, 1}, 2) == "A0A0");
  CHECK(word_string(WordKey{2, 3}, 2) == "A1A0");
  CHECK(word_string(WordKey{0, 1}, 2) == "1");
  CHECK(word_of_string("A1A0", 2) == WordKey{2, 3});
  CHECK(word_of_string("1", 2) == WordKey{0, 1});
  CHECK(word_of_string("A1A3", 4) == WordKey{2, 8});  // rank 1 + 3 + 1*4
  CHECK_THROWS_AS(word_of_string("A5", 2), BadLetter);
  CHECK_THROWS_AS(word_of_string("B2", 2), BadLetter);
  // left-multiplication law A_i w^k_l = w^{q^l i + k}_{l+1}
  CHECK(concat(WordKey{1, 2}, WordKey{1, 1}, 2) == WordKey{2, 3});
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    int q = (it % 2) ? 2 : 4;
    int len = (int)(rng() % 5);
    Rank r = 1 + (Rank)(rng() % q_pow(q, len));
    WordKey w{len, r};
    CHECK(word_of_letters(word_letters(w, q), q) == w);
    CHECK(word_of_string(word_string(w, q), q) == w);
  }
}

TEST_CASE("basis enumeration: longest words first") {
  CHECK(basis_dim(4, 2) == 31);
  CHECK(basis_dim(3, 4) == 85);
  CHECK(basis_dim(0, 2) == 1);
  // g=1, n=2 ordering: w1_2..w4_2, w1_1, w2_1, w1_0
  std::vector<WordKey> expect = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {1, 1}, {1, 2}, {0, 1}};
  for (Rank p = 1; p <= 7; ++p) {
    CHECK(basis_word(p, 2, 2) == expect[p - 1]);
    CHECK(basis_pos(expect[p - 1], 2, 2) == p);
  }
  CHECK_THROWS_AS(basis_pos(WordKey{3, 1}, 2, 2), OutOfRange);
  CHECK_THROWS_AS(basis_word(8, 2, 2), OutOfRange);
}

TEST_CASE("concatenation product") {
  TE a0 = letter(0, 2, 2), a1 = letter(1, 2, 2);
  TE p = concat_mul(a0, a1);
  CHECK(p.coeff(WordKey{2, 2}) == Rat(1));  // A0A1
  CHECK(p.t.size() == 1);
  TE one = TE::unit(2, 2);
  CHECK(concat_mul(one, a1) == a1);
  CHECK(concat_mul(a1, one) == a1);
  TE s = te_add(a0, a1);
  TE sq = concat_mul(s, s);
  for (Rank r = 1; r <= 4; ++r) CHECK(sq.coeff(WordKey{2, r}) == Rat(1));
  // truncation at n
  TE a0n1 = letter(0, 1, 2);
  CHECK(concat_mul(a0n1, letter(1, 1, 2)).zero());
  TE bad{2, 4, {}};
  CHECK_THROWS_AS(concat_mul(a0, bad), AlphabetMismatch);
}

TEST_CASE("shuffle product") {
  TE a0 = letter(0, 3, 2), a1 = letter(1, 3, 2);
  TE sh = shuffle_mul(a0, a1);
  CHECK(sh.coeff(WordKey{2, 2}) == Rat(1));
  CHECK(sh.coeff(WordKey{2, 3}) == Rat(1));
  CHECK(sh.t.size() == 2);
  TE c = shuffle_mul(shuffle_mul(a1, a1), a1);
  CHECK(c.coeff(WordKey{3, 8}) == Rat(6));  // A1 sh A1 sh A1 = 6 A1A1A1
  CHECK(c.t.size() == 1);
  CHECK(shuffle_mul(TE::unit(3, 2), a0) == a0);
}

TEST_CASE("coproduct") {
  TE a0 = letter(0, 2, 2), a1 = letter(1, 2, 2);
  auto d = coproduct(concat_mul(a0, a1));
  WordKey e{0, 1}, w0{1, 1}, w1{1, 2}, w01{2, 2};
  CHECK(d.t.at({w01, e}) == Rat(1));
  CHECK(d.t.at({e, w01}) == Rat(1));
  CHECK(d.t.at({w0, w1}) == Rat(1));
  CHECK(d.t.at({w1, w0}) == Rat(1));
  CHECK(d.t.size() == 4);
  auto d1 = coproduct(TE::unit(2, 2));
  CHECK(d1.t.size() == 1);
  CHECK(d1.t.at({e, e}) == Rat(1));
  auto d00 = coproduct(concat_mul(a0, a0));
  CHECK(d00.t.at({w0, w0}) == Rat(2));
}

TEST_CASE("exp and log") {
  TE a0 = letter(0, 2, 2);
  TE e = exp_trunc(a0);
  CHECK(e.coeff(WordKey{0, 1}) == Rat(1));
  CHECK(e.coeff(WordKey{1, 1}) == Rat(1));
  CHECK(e.coeff(WordKey{2, 1}) == Rat(1, 2));
  TE l = log_trunc(te_add(TE::unit(2, 2), a0));
  CHECK(l.coeff(WordKey{1, 1}) == Rat(1));
  CHECK(l.coeff(WordKey{2, 1}) == Rat(-1, 2));
  TE s = exp_trunc(te_add(letter(0, 2, 2), letter(1, 2, 2)));
  CHECK(s.coeff(WordKey{2, 2}) == Rat(1, 2));
  CHECK(s.coeff(WordKey{2, 3}) == Rat(1, 2));
  CHECK_THROWS_AS(exp_trunc(TE::unit(2, 2)), BadConstantTerm);
  CHECK_THROWS_AS(log_trunc(a0), BadConstantTerm);
}

TEST_CASE("exp/log inverses, bialgebra, duality on random elements") {
  std::mt19937 rng(2024);
  for (int it = 0; it < 30; ++it) {
    int q = (it % 2) ? 2 : 4;
    int n = 1 + (int)(rng() % 3);
    TE u = rnd_elem(rng, n, q, true);
    TE g = te_add(TE::unit(n, q), rnd_elem(rng, n, q, true));
    CHECK(log_trunc(exp_trunc(u)) == u);
    CHECK(exp_trunc(log_trunc(g)) == g);
    // Delta is an algebra morphism for concatenation
    TE v = rnd_elem(rng, n, q, false);
    CHECK(coproduct(concat_mul(g, v)) == ts_mul(coproduct(g), coproduct(v)));
  }
  // coefficient extraction on a group-like is a shuffle character
  for (int it = 0; it < 20; ++it) {
    int n = 3;
    TE p{n, 2, {}};
    p.t.emplace(WordKey{1, 1}, Rat((long)(rng() % 5) - 2));
    p.t.emplace(WordKey{1, 2}, Rat((long)(rng() % 5) - 2));
    TE br = te_sub(concat_mul(letter(0, n, 2), letter(1, n, 2)),
                   concat_mul(letter(1, n, 2), letter(0, n, 2)));
    p = te_add(p, te_qscale(Rat((long)(rng() % 5) - 2), br));
    p.strip();
    TE G = exp_trunc(p);
    CHECK(is_grouplike(G));
    TE u = rnd_elem(rng, 1, 2, false);
    TE v = rnd_elem(rng, 2, 2, false);
    TE uv = shuffle_mul(TE{n, 2, u.t}, TE{n, 2, v.t});
    Rat lhs = 0, rhs = 0;
    for (auto& [w, c] : uv.t) lhs += c * G.coeff(w);
    Rat pu = 0, pv = 0;
    for (auto& [w, c] : u.t) pu += c * G.coeff(w);
    for (auto& [w, c] : v.t) pv += c * G.coeff(w);
    rhs = pu * pv;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("primitive and group-like predicates") {
  TE a0 = letter(0, 2, 2), a1 = letter(1, 2, 2);
  TE br = te_sub(concat_mul(a0, a1), concat_mul(a1, a0));
  CHECK(is_primitive(br));
  CHECK_FALSE(is_primitive(concat_mul(a0, a1)));
  CHECK(is_grouplike(exp_trunc(a0)));
  CHECK_FALSE(is_grouplike(te_add(TE::unit(2, 2), concat_mul(a0, a1))));
}

TEST_CASE("bracket words and lie_expand") {
  BracketWord b = bracket_parse("[[A0,A1],A1]");
  CHECK(bracket_str(b) == "[[A0,A1],A1]");
  TE t = bracket_expand<Rat>(b, 3, 2);
  CHECK(t.coeff(WordKey{3, 4}) == Rat(1));   // A0A1A1
  CHECK(t.coeff(WordKey{3, 6}) == Rat(-2));  // A1A0A1
  CHECK(t.coeff(WordKey{3, 7}) == Rat(1));   // A1A1A0
  CHECK(t.t.size() == 3);
  CHECK(bracket_expand<Rat>(bracket_parse("[A0,A0]"), 2, 2).zero());
  // [A1,[A1,[A1,A0]]] = A1^3 A0 - 3 A1A1A0A1 + 3 A1A0A1A1 - A0A1^3
  TE t4 = bracket_expand<Rat>(bracket_parse("[A1,[A1,[A1,A0]]]"), 4, 2);
  CHECK(t4.coeff(WordKey{4, 15}) == Rat(1));
  CHECK(t4.coeff(WordKey{4, 14}) == Rat(-3));
  CHECK(t4.coeff(WordKey{4, 12}) == Rat(3));
  CHECK(t4.coeff(WordKey{4, 8}) == Rat(-1));
  CHECK(is_primitive(t4));
  CHECK_THROWS_AS(bracket_parse("[A0,A1"), BadLetter);
  CHECK_THROWS_AS(bracket_expand<Rat>(BracketWord::leaf(5), 2, 2), BadLetter);

  LieExpr<Rat> le{3, 2, {{BracketWord::leaf(1), Rat(1)}, {b, Rat(2)}}};
  TE full = lie_expand(le);
  CHECK(full.coeff(WordKey{1, 2}) == Rat(1));
  CHECK(full.coeff(WordKey{3, 6}) == Rat(-4));
}

TEST_CASE("lyndon basis and lie coordinates") {
  auto lw = lyndon_words(3, 2);
  std::vector<std::vector<int>> expect = {{0}, {1}, {0, 1}, {0, 0, 1}, {0, 1, 1}};
  CHECK(lw == expect);
  std::mt19937 rng(55);
  for (int it = 0; it < 20; ++it) {
    // random Lie element: K-combination of Lyndon bracketings
    int n = 3, q = (it % 2) ? 2 : 4;
    TE e{n, q, {}};
    for (auto& w : lyndon_words(n, q))
      if (rng() % 2) {
        Rat c((long)(rng() % 7) - 3);
        e = te_add(e, te_qscale(c, bracket_expand<Rat>(lyndon_bracketing(w), n, q)));
      }
    auto coords = lie_coords(e);
    TE back{n, q, {}};
    for (auto& [bw, c] : coords)
      back = te_add(back, te_qscale(c, bracket_expand<Rat>(bw, n, q)));
    CHECK(back == e);
  }
  CHECK_THROWS_AS(lie_coords(concat_mul(letter(0, 2, 2), letter(1, 2, 2))), InvalidInput);
}
