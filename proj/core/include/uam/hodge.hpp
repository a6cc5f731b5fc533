#pragma once
#include <map>

#include "uam/extend.hpp"

namespace uam {

// Index set F_n = {1 + sum f_i (2g)^i : f_i in {g,..,2g-1}}, the ranks of the
// length-n words using only the letters A_g..A_{2g-1}; F_0 = {1}.
std::vector<Rank> f_index_set(int n, int g);
bool in_f_index_set(Rank f, int len, int g);

// Generators of F^0 U_n over the affine chart X (sections a) and over the
// chart Y at infinity (sections b). The lift of w^f_m is
//   w^f_m + sum_{l=m+1}^{n} sum_k a^{l,k}_{m,f} w^k_l
// and correspondingly with b over Y. Storage: a[m] maps f in F_m to a table
// indexed [l-(m+1)][k-1].
struct HodgeGenerators {
  CurveModel curve;
  int level = 0;
  std::vector<std::map<Rank, std::vector<std::vector<FuncElem>>>> a, b;

  int q() const { return 2 * curve.g; }
  const FuncElem& a_coeff(int m, Rank f, int l, Rank k) const;
  const FuncElem& b_coeff(int m, Rank f, int l, Rank k) const;
  // the full lift of w^f_m as a tensor element (m = level gives the bare word)
  TensorElem<FuncElem> generator(int m, Rank f, bool over_y = false) const;
};

HodgeGenerators hodge_initial(const CurveModel& curve);  // level 0: the section 1

// One level of the lifting algorithm. Stages m = n-1..0 peel the principal
// part of the gluing defect s^{n+1,k}_{m,f} at infinity: a polynomial part
// A in K[x,y] removes orders >= 2g, the first-level gauge functions h^{t,0}_1
// remove the odd orders 2(t-g)-1 below (their coefficients become the
// constants lambda fixing the a's one level up), and powers of x remove the
// remaining even orders. reverse_order only permutes the (f,k) processing
// order; the result must not change (uniqueness of the lifts).
HodgeGenerators hodge_f0_step(const HodgeGenerators& gens, const LogExtension& ext,
                              bool reverse_order = false);
HodgeGenerators hodge_run(const CurveModel& curve, int level);

// Exact verification of the gluing identities relating b to a through the
// gauge entries, plus the basepoint normalisation a^{n,k}_{0,1}(b) = 0.
struct ImReportRow {
  int m = 0;
  Rank f = 1, k = 1;
  bool identity_ok = true;
  bool basepoint_ok = true;
};
struct ImReport {
  bool pass = true;
  std::vector<ImReportRow> rows;
};
ImReport check_conditions_Im(const HodgeGenerators& gens, const LogExtension& ext);

// The four elliptic constants, each the unique rational killing one
// pi-expansion coefficient (F below is the gauge entry h^{2,0}_1):
//   lambda: lambda dF - F^2/2 alpha_0 has at worst a log pole at infinity
//   mu:     lambda/3 F dF + mu dF - F^3/6 alpha_0 has at worst a simple pole
//   nu:     nu x + lambda F^2 regular at infinity
//   kappa:  nu x + kappa F + lambda F^2 regular at infinity
struct HodgeConstants {
  Rat lambda, mu, kappa, nu;
};
HodgeConstants hodge_constants(const CurveModel& curve);  // NotElliptic unless g = 1

// The level-2 generator list for a genus-2 odd model, ordered
// 1, A_2, A_3, A_2^2, A_2A_3, A_3A_2, A_3^2.
std::vector<TensorElem<FuncElem>> genus2_example(const CurveModel& curve);

}  // namespace uam
