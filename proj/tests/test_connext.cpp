#include "doctest.h"
#include "uam/extend.hpp"

using namespace uam;

namespace {

Poly P(std::initializer_list<Rat> c) { return Poly(c); }

const Poly fcube = P({1, 0, 0, 1});     // x^3 + 1
const Poly fell = P({1, -1, 0, 1});     // x^3 - x + 1
const Poly fquint = P({1, 0, 0, 0, 0, 1});  // x^5 + 1

// F = (2/lc) y/x^g, the gauge entry h^{g+1,0}_1 for any odd model
FuncElem paper_F(const Poly& f, int g) {
  return FuncElem::y_times(RatFn(Poly::constant(2 / f.lc()), Poly::monomial(1, g)));
}

bool mat_eq(const ConnMat& a, const ConnMat& b) {
  if (a.n != b.n || a.q != b.q || a.m.size() != b.m.size()) return false;
  for (size_t i = 0; i < a.m.size(); ++i)
    for (size_t j = 0; j < a.m.size(); ++j)
      if (!(a.m[i][j] == b.m[i][j])) return false;
  return true;
}

bool is_identity(const GaugeMat& g) {
  for (size_t i = 0; i < g.m.size(); ++i)
    for (size_t j = 0; j < g.m.size(); ++j) {
      const FuncElem want = (i == j) ? FuncElem::constant(1) : FuncElem{};
      if (!(g.m[i][j] == want)) return false;
    }
  return true;
}

GaugeMat gm_mul(const GaugeMat& a, const GaugeMat& b, const Poly& f) {
  size_t d = a.m.size();
  GaugeMat r{a.n, a.q, std::vector<std::vector<FuncElem>>(d, std::vector<FuncElem>(d))};
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      FuncElem s;
      for (size_t k = 0; k < d; ++k) s = fe_add(s, fe_mul(a.m[i][k], b.m[k][j], f));
      r.m[i][j] = s;
    }
  return r;
}

}  // namespace

TEST_CASE("solve_h on the standard second-kind forms") {
  CurveModel C = curve_new(fcube, 1);
  FuncElem Fp = paper_F(fcube, 1);  // 2y/x

  // alpha_1 = x dx/y has a double pole; removing it needs exactly F
  auto s1 = solve_h(C.alphas[1], C);
  CHECK(s1.h == Fp);
  CHECK(s1.c == wf_sub(fe_d(Fp, C.f), C.alphas[1]));
  CHECK(form_pole_order(s1.c, C) <= 1);

  // alpha_0 is regular at infinity: nothing to remove
  auto s0 = solve_h(C.alphas[0], C);
  CHECK(s0.h.zero());
  CHECK(s0.c == wf_neg(C.alphas[0]));

  // F dF = d(F^2/2) integrates exactly
  auto s2 = solve_h(wf_mul(Fp, fe_d(Fp, C.f), C.f), C);
  CHECK(s2.h == fe_scale(Rat(1, 2), fe_mul(Fp, Fp, C.f)));
  CHECK(s2.c.zero());

  // F alpha_0 has residue -4 at infinity: no exact primitive exists
  CHECK_THROWS_AS(solve_h(wf_mul(Fp, C.alphas[0], C.f), C, true), NotIntegrable);
  auto s3 = solve_h(wf_mul(Fp, C.alphas[0], C.f), C);  // lenient mode keeps the log pole
  CHECK(s3.h.zero());
  CHECK(form_pole_order(s3.c, C) == 1);
}

TEST_CASE("lambda is pinned by the pole of lambda dF - F^2/2 alpha_0") {
  CurveModel C = curve_new(fcube, 1);
  FuncElem Fp = paper_F(fcube, 1);
  OneForm half_F2_a0 = wf_mul(fe_scale(Rat(1, 2), fe_mul(Fp, Fp, C.f)), C.alphas[0], C.f);
  OneForm dF = fe_d(Fp, C.f);
  // x(pi) is even and y(pi) odd, so this combination has only even orders:
  // once lambda = 2 kills the double pole it is outright regular at infinity
  CHECK(form_pole_order(wf_sub(wf_scale(2, dF), half_F2_a0), C) <= 0);
  CHECK(form_pole_order(wf_sub(wf_scale(3, dF), half_F2_a0), C) == 2);
  CHECK(form_pole_order(wf_sub(wf_scale(-2, dF), half_F2_a0), C) == 2);
}

TEST_CASE("extension tables, genus 1, levels 1 to 4") {
  for (const Poly* f : {&fcube, &fell}) {
    CAPTURE(poly_str(*f));
    CurveModel C = curve_new(*f, 1);
    LogExtension e = log_extend(C, 4);
    FuncElem Fp = paper_F(*f, 1);
    FuncElem F2 = fe_mul(Fp, Fp, C.f);
    OneForm dF = fe_d(Fp, C.f);
    OneForm Fa0 = wf_mul(Fp, C.alphas[0], C.f);

    // level 1
    CHECK(e.h0[1][0].zero());
    CHECK(e.h0[1][1] == Fp);
    CHECK(e.c0[1][0] == wf_neg(C.alphas[0]));
    CHECK(e.c0[1][1] == wf_sub(dF, C.alphas[1]));

    // level 2: words A0A0, A0A1, A1A0, A1A1
    CHECK(e.h0[2][0].zero());
    CHECK(e.h0[2][1].zero());
    CHECK(e.h0[2][2].zero());
    CHECK(e.h0[2][3] == fe_scale(Rat(1, 2), F2));
    CHECK(e.c0[2][0].zero());
    CHECK(e.c0[2][1] == wf_neg(Fa0));
    CHECK(e.c0[2][2] == Fa0);
    CHECK(e.c0[2][3].zero());

    // level 3
    std::vector<FuncElem> h3 = {{},
                                {},
                                {},
                                fe_scale(2, Fp),
                                {},
                                fe_scale(-4, Fp),
                                fe_scale(2, Fp),
                                fe_scale(Rat(1, 6), fe_pow(Fp, 3, C.f))};
    REQUIRE(e.h0[3].size() == 8);
    for (int r = 0; r < 8; ++r) {
      CAPTURE(r);
      CHECK(e.h0[3][r] == h3[r]);
    }
    OneForm c4 = wf_sub(wf_scale(2, dF), wf_mul(fe_scale(Rat(1, 2), F2), C.alphas[0], C.f));
    CHECK(e.c0[3][3] == c4);
    CHECK(e.c0[3][5] == wf_scale(-2, c4));
    CHECK(e.c0[3][6] == c4);
    for (int r : {0, 1, 2, 4, 7}) {
      CAPTURE(r);
      CHECK(e.c0[3][r].zero());
    }
    CHECK(form_pole_order(c4, C) <= 1);  // at worst logarithmic

    // level 4: nonzero h only on A0A1^3 and its reshuffles and on A1^4
    REQUIRE(e.h0[4].size() == 16);
    std::vector<std::pair<int, FuncElem>> h4 = {
        {7, fe_scale(Rat(1, 3), F2)},           // A0A1A1A1
        {11, F2},                               // A1A0A1A1
        {13, fe_scale(-3, F2)},                 // A1A1A0A1
        {14, fe_scale(Rat(5, 3), F2)},          // A1A1A1A0
        {15, fe_scale(Rat(1, 24), fe_pow(Fp, 4, C.f))}};  // A1A1A1A1
    for (int r = 0; r < 16; ++r) {
      CAPTURE(r);
      FuncElem want;
      for (auto& [rr, v] : h4)
        if (rr == r) want = v;
      CHECK(e.h0[4][r] == want);
    }
  }
}

TEST_CASE("non-monic model rescales F") {
  Poly f4 = P({1, 0, 0, 4});  // y^2 = 4x^3 + 1
  CurveModel C = curve_new(f4, 1);
  LogExtension e = log_extend(C, 1);
  // F = (2/4) y/x = y/(2x)
  CHECK(e.h0[1][1] == FuncElem::y_times(RatFn(Poly::constant(1), P({0, 2}))));
  CHECK(pole_order_at_infinity(e.h0[1][1], C) == 1);
}

TEST_CASE("extension is independent of the declared F") {
  // the gauge construction never reads CurveModel::F; a custom choice with
  // the same pole order must give identical tables
  FuncElem oddF = FuncElem::y_times(RatFn(P({1}), P({0, 1})));  // y/x
  CurveModel C1 = curve_new(fcube, 1);
  CurveModel C2 = curve_new(fcube, 1, BasisChoice::standard, {}, FChoice::custom, oddF);
  LogExtension e1 = log_extend(C1, 3), e2 = log_extend(C2, 3);
  for (int m = 1; m <= 3; ++m)
    for (size_t r = 0; r < e1.h0[m].size(); ++r) {
      CHECK(e1.h0[m][r] == e2.h0[m][r]);
      CHECK(e1.c0[m][r] == e2.c0[m][r]);
    }
}

TEST_CASE("genus 2 level 1 and 2") {
  CurveModel C = curve_new(fquint, 2);
  LogExtension e = log_extend(C, 2);
  FuncElem Fraw = FuncElem::y_times(RatFn(P({1}), Poly::monomial(1, 2)));  // y/x^2

  CHECK(e.h0[1][0].zero());
  CHECK(e.h0[1][1].zero());
  CHECK(e.h0[1][2] == fe_scale(2, Fraw));
  CHECK(e.h0[1][3] == fe_scale(Rat(2, 3), fe_pow(Fraw, 3, C.f)));
  CHECK(e.c0[1][0] == wf_neg(C.alphas[0]));
  CHECK(e.c0[1][1] == wf_neg(C.alphas[1]));
  CHECK(e.c0[1][2] == wf_sub(fe_d(e.h0[1][2], C.f), C.alphas[2]));
  CHECK(e.c0[1][3] == wf_sub(fe_d(e.h0[1][3], C.f), C.alphas[3]));

  // pole orders of the first-level gauge entries: 0 for t <= g, 2(t-g)-1 above
  CHECK(pole_order_at_infinity(e.h0[1][2], C) == 1);
  CHECK(pole_order_at_infinity(e.h0[1][3], C) == 3);

  // every level-2 c is at worst logarithmic and supported over x = 0
  REQUIRE(e.c0[2].size() == 16);
  for (auto& c : e.c0[2])
    if (!c.zero()) CHECK(form_pole_order(c, C) <= 1);
}

TEST_CASE("universal connection matrices") {
  CurveModel C = curve_new(fcube, 1);
  ConnMat C1 = universal_conn_matrix(C, 1);
  REQUIRE(C1.m.size() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      OneForm want;
      if (j == 2 && i < 2) want = wf_neg(C.alphas[i]);
      CHECK(C1.m[i][j] == want);
    }

  ConnMat C2 = universal_conn_matrix(C, 2);
  REQUIRE(C2.m.size() == 7);
  // (u, w) entry is -alpha_i iff u = A_i w
  CHECK(C2.m[0][4] == wf_neg(C.alphas[0]));  // A0A0 <- A0
  CHECK(C2.m[1][5] == wf_neg(C.alphas[0]));  // A0A1 <- A1
  CHECK(C2.m[2][4] == wf_neg(C.alphas[1]));  // A1A0 <- A0
  CHECK(C2.m[3][5] == wf_neg(C.alphas[1]));  // A1A1 <- A1
  CHECK(C2.m[4][6] == wf_neg(C.alphas[0]));
  CHECK(C2.m[5][6] == wf_neg(C.alphas[1]));
  int nonzero = 0;
  for (auto& row : C2.m)
    for (auto& w : row)
      if (!w.zero()) ++nonzero;
  CHECK(nonzero == 6);

  CurveModel H = curve_new(fquint, 2);
  ConnMat HC1 = universal_conn_matrix(H, 1);
  REQUIRE(HC1.m.size() == 5);
  for (size_t i = 0; i < 4; ++i) CHECK(HC1.m[i][4] == wf_neg(H.alphas[i]));
}

TEST_CASE("gauge matrix and transformed connection at level 2") {
  CurveModel C = curve_new(fcube, 1);
  LogExtension e = log_extend(C, 2);
  FuncElem Fp = paper_F(fcube, 1);
  FuncElem halfF2 = fe_scale(Rat(1, 2), fe_mul(Fp, Fp, C.f));

  GaugeMat G = gauge_matrix(e, 2);
  REQUIRE(G.m.size() == 7);
  for (size_t i = 0; i < 7; ++i) CHECK(G.m[i][i] == FuncElem::constant(1));
  // H_2 block, rows A0A0..A1A1 x cols A0, A1, 1
  std::vector<std::vector<FuncElem>> H2 = {
      {{}, {}, {}}, {{}, {}, {}}, {Fp, {}, {}}, {{}, Fp, halfF2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(G.m[i][4 + j] == H2[i][j]);
  CHECK(G.m[5][6] == Fp);  // G_1 block repeats below

  ConnMat Cp = conn_prime_matrix(e, 2);
  OneForm a1p = wf_sub(fe_d(Fp, C.f), C.alphas[1]);
  OneForm Fa0 = wf_mul(Fp, C.alphas[0], C.f);
  std::vector<std::vector<OneForm>> D2 = {{wf_neg(C.alphas[0]), {}, {}},
                                          {{}, wf_neg(C.alphas[0]), wf_neg(Fa0)},
                                          {a1p, {}, Fa0},
                                          {{}, a1p, {}}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(Cp.m[i][4 + j] == D2[i][j]);
  // lower-right block is the level-1 transformed connection
  CHECK(Cp.m[4][6] == wf_neg(C.alphas[0]));
  CHECK(Cp.m[5][6] == a1p);

  // C' = G^{-1}(C G + dG) recomputed densely agrees with the structured build
  ConnMat viaGauge = gauge_of_connection(universal_conn_matrix(C, 2), G, C);
  CHECK(mat_eq(Cp, viaGauge));
}

TEST_CASE("gauge consistency at higher level and genus") {
  CurveModel C = curve_new(fell, 1);
  LogExtension e = log_extend(C, 3);
  GaugeMat G = gauge_matrix(e, 3);
  CHECK(is_identity(gm_mul(G, gauge_inverse(G, C), C.f)));
  CHECK(mat_eq(conn_prime_matrix(e, 3), gauge_of_connection(universal_conn_matrix(C, 3), G, C)));

  // projection compatibility: the level-2 data sits in the lower-right corner
  ConnMat c3 = conn_prime_matrix(e, 3), c2 = conn_prime_matrix(e, 2);
  size_t off = c3.m.size() - c2.m.size();
  for (size_t i = 0; i < c2.m.size(); ++i)
    for (size_t j = 0; j < c2.m.size(); ++j) CHECK(c3.m[off + i][off + j] == c2.m[i][j]);

  CurveModel H = curve_new(fquint, 2);
  LogExtension he = log_extend(H, 2);
  GaugeMat HG = gauge_matrix(he, 2);
  CHECK(is_identity(gm_mul(HG, gauge_inverse(HG, H), H.f)));
  CHECK(mat_eq(conn_prime_matrix(he, 2),
               gauge_of_connection(universal_conn_matrix(H, 2), HG, H)));
}

TEST_CASE("gauge action on basis words") {
  CurveModel C = curve_new(fcube, 1);
  LogExtension e3 = log_extend(C, 3);
  FuncElem Fp = paper_F(fcube, 1);
  FuncElem F2 = fe_mul(Fp, Fp, C.f);

  {
    LogExtension e2 = log_extend(C, 2);
    auto g1 = gauge_apply_word(e2, WordKey{0, 1});  // G_2(1) = 1 + F A1 + F^2/2 A1A1
    CHECK(g1.coeff(WordKey{0, 1}) == FuncElem::constant(1));
    CHECK(g1.coeff(WordKey{1, 2}) == Fp);
    CHECK(g1.coeff(WordKey{2, 4}) == fe_scale(Rat(1, 2), F2));
    CHECK(g1.t.size() == 3);

    auto ga0 = gauge_apply_word(e2, WordKey{1, 1});  // G_2(A0) = A0 + F A1A0
    CHECK(ga0.coeff(WordKey{1, 1}) == FuncElem::constant(1));
    CHECK(ga0.coeff(WordKey{2, 3}) == Fp);
    CHECK(ga0.t.size() == 2);
  }

  auto g1 = gauge_apply_word(e3, WordKey{0, 1});
  CHECK(g1.coeff(WordKey{3, 4}) == fe_scale(2, Fp));
  CHECK(g1.coeff(WordKey{3, 6}) == fe_scale(-4, Fp));
  CHECK(g1.coeff(WordKey{3, 7}) == fe_scale(2, Fp));
  CHECK(g1.coeff(WordKey{3, 8}) == fe_scale(Rat(1, 6), fe_pow(Fp, 3, C.f)));

  // top-length words are fixed
  auto gw = gauge_apply_word(e3, WordKey{3, 5});
  CHECK(gw.coeff(WordKey{3, 5}) == FuncElem::constant(1));
  CHECK(gw.t.size() == 1);
}

TEST_CASE("pole audit: transformed connections pass, raw ones fail") {
  for (const Poly* f : {&fcube, &fell}) {
    CurveModel C = curve_new(*f, 1);
    LogExtension e = log_extend(C, 3);
    CHECK(verify_log_poles(conn_prime_matrix(e, 2), C).pass);
    CHECK(verify_log_poles(conn_prime_matrix(e, 3), C).pass);

    PoleReport raw = verify_log_poles(universal_conn_matrix(C, 2), C);
    CHECK_FALSE(raw.pass);
    bool saw_order2 = false;
    for (auto& r : raw.rows)
      if (r.pole_order == 2 && !r.log_ok) saw_order2 = true;
    CHECK(saw_order2);  // alpha_1 contributes order 2(t-g+1) = 2
  }
  CurveModel H = curve_new(fquint, 2);
  LogExtension he = log_extend(H, 2);
  CHECK(verify_log_poles(conn_prime_matrix(he, 2), H).pass);
  CHECK_FALSE(verify_log_poles(universal_conn_matrix(H, 1), H).pass);
}

TEST_CASE("entry accessors validate their ranges") {
  CurveModel C = curve_new(fcube, 1);
  LogExtension e = log_extend(C, 2);
  CHECK(e.h_entry(2, 2, 1) == e.h0[1][1]);  // shift law h^{r,i}_m = h^{r,0}_{m-i}
  CHECK(e.c_entry(2, 2, 0) == e.c0[2][1]);
  CHECK_THROWS_AS(e.h_entry(3, 1, 0), OutOfRange);
  CHECK_THROWS_AS(e.h_entry(2, 3, 1), OutOfRange);
  CHECK_THROWS_AS(e.c_entry(1, 3, 0), OutOfRange);
  CHECK_THROWS_AS(e.c_entry(2, 1, 2), OutOfRange);
}
