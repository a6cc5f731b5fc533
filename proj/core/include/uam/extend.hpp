#pragma once
#include <vector>

#include "uam/expand.hpp"
#include "uam/tensor.hpp"

namespace uam {

// Result of removing the principal part of a 1-form by an exact differential:
// c := dh - target keeps at worst a logarithmic pole at infinity. Since the
// standard F is exactly 1/pi, h is the termwise antiderivative of the
// principal part written as a polynomial in F (plus no constant: the pi^0
// coefficient of h is normalised to zero).
struct SolveHResult {
  FuncElem h;
  OneForm c;
};
SolveHResult solve_h(const OneForm& target, const CurveModel& curve, bool require_exact = false);

// The logarithmic extension data for the universal unipotent connection at
// level n. Everything is stored through the base entries h^{r,0}_s, c^{r,0}_s
// (s = 1..n, r = 1..(2g)^s); the index shift h^{r,i+1}_{s+1} = h^{r,i}_s
// makes every other block entry a lookup.
struct LogExtension {
  CurveModel curve;
  int level = 0;
  std::vector<std::vector<FuncElem>> h0;  // h0[s][r-1]
  std::vector<std::vector<OneForm>> c0;   // c0[s][r-1]

  int q() const { return 2 * curve.g; }
  // h^{r,i}_m and c^{r,i}_m for 0 <= i < m <= level
  const FuncElem& h_entry(int m, Rank r, int i) const;
  const OneForm& c_entry(int m, Rank r, int i) const;
};

// One step of the extension algorithm (level -> level+1): for each new word
// solve  c^{r,0}_{n+1} = dh^{r,0}_{n+1}
//        - alpha_{psi(r,0,n)-1} h^{r-(psi-1)(2g)^n,0}_n
//        - sum_{t=1..n} c^{phi(r,0,t)+1,0}_t h^{psi(r,0,t),t}_{n+1}.
LogExtension log_extend_step(const LogExtension& ext);
LogExtension log_extend(const CurveModel& curve, int level);

// Dense matrices in the basis B_n (words of length n first, ..., empty word
// last). Only materialised for reports, tests and small-level dumps; the
// pipelines use the structured entries above.
struct ConnMat {
  int n = 0, q = 2;
  std::vector<std::vector<OneForm>> m;
};
struct GaugeMat {
  int n = 0, q = 2;
  std::vector<std::vector<FuncElem>> m;
};

ConnMat universal_conn_matrix(const CurveModel& curve, int n);
ConnMat conn_prime_matrix(const LogExtension& ext, int n);
GaugeMat gauge_matrix(const LogExtension& ext, int n);
// block back-substitution; never forms a full inverse of anything non-triangular
GaugeMat gauge_inverse(const GaugeMat& G, const CurveModel& curve);
// C' = G^{-1} (C G + dG), by triangular solve against the unipotent G
ConnMat gauge_of_connection(const ConnMat& C, const GaugeMat& G, const CurveModel& curve);

// G_n(w^k_l) = w^k_l + sum_{s>l} sum_t w_s^{k+(t-1)(2g)^l} h^{t,l}_s
TensorElem<FuncElem> gauge_apply_word(const LogExtension& ext, const WordKey& w);

// Pole audit of a connection matrix. PASS means every nonzero entry has at
// worst a logarithmic pole at infinity (order <= 1 against dpi) and its
// affine poles are confined to the zero locus of x, where the gauge function
// F legitimately lives. The raw universal connection fails for n >= 1
// because alpha_t carries a pole of order 2(t-g+1) at infinity.
struct PoleReportRow {
  int row = 0, col = 0;  // 1-based positions in the basis B_n
  int pole_order = 0;
  bool log_ok = true;
  bool affine_ok = true;
};
struct PoleReport {
  bool pass = true;
  std::vector<PoleReportRow> rows;  // one per nonzero entry
};
PoleReport verify_log_poles(const ConnMat& C, const CurveModel& curve);

}  // namespace uam
