#include "uam/extend.hpp"

#include <string>

namespace uam {

namespace {

// the exact uniformiser inverse y/x^g = 1/pi
FuncElem f_raw(const CurveModel& curve) {
  return FuncElem::y_times(RatFn(Poly::constant(1), Poly::monomial(1, curve.g)));
}

bool is_x_power(const Poly& p) {
  if (p.zero()) return false;
  for (int i = 0; i < p.deg(); ++i)
    if (!is_zero(p.coeff(i))) return false;
  return true;
}

// poles on the affine curve confined to the zero locus of x (where the gauge
// function F lives); a + b*y qualifies iff den(a) and den(b*f) are x-powers
bool affine_poles_only_over_x0(const FuncElem& u, const Poly& f) {
  RatFn bf = u.b * RatFn::of(f);
  return (u.a.zero() || is_x_power(u.a.den)) && (bf.zero() || is_x_power(bf.den));
}

}  // namespace

SolveHResult solve_h(const OneForm& target, const CurveModel& curve, bool require_exact) {
  SolveHResult out;
  out.h = FuncElem{};
  if (target.zero()) {
    out.c = OneForm{};
    return out;
  }
  int P = form_pole_order(target, curve);
  if (P >= 2) {
    // d(F^(k-1)) = -(k-1) pi^-k dpi exactly, so each principal order is
    // cancelled by a single power of F = y/x^g; no pi^0 term ever appears,
    // which is the required normalisation.
    Expander ex(curve, P + 4);
    LaurentSeries ts = ex.expand_form(target);
    FuncElem Fr = f_raw(curve);
    for (int k = 2; k <= P; ++k) {
      Rat a = ts.coeff(-k);
      if (!is_zero(a)) out.h = fe_add(out.h, fe_scale(a / Rat(1 - k), fe_pow(Fr, k - 1, curve.f)));
    }
  }
  out.c = wf_sub(fe_d(out.h, curve.f), target);
  if (!out.c.zero()) {
    int pc = form_pole_order(out.c, curve);
    if (pc > 1)
      throw NotIntegrable("pole order " + std::to_string(pc) +
                          " survives the principal part solve");
    if (require_exact && pc == 1) {
      Expander ex(curve, 4);
      if (!is_zero(ex.expand_form(out.c).coeff(-1)))
        throw NotIntegrable("nonzero residue at infinity: no exact antiderivative exists");
    }
  }
  return out;
}

const FuncElem& LogExtension::h_entry(int m, Rank r, int i) const {
  if (m < 1 || m > level || i < 0 || i >= m)
    throw OutOfRange("h entry level " + std::to_string(m) + " shift " + std::to_string(i));
  int s = m - i;
  if (r < 1 || r > (Rank)h0[s].size()) throw OutOfRange("h entry rank " + std::to_string(r));
  return h0[s][r - 1];
}

const OneForm& LogExtension::c_entry(int m, Rank r, int i) const {
  if (m < 1 || m > level || i < 0 || i >= m)
    throw OutOfRange("c entry level " + std::to_string(m) + " shift " + std::to_string(i));
  int s = m - i;
  if (r < 1 || r > (Rank)c0[s].size()) throw OutOfRange("c entry rank " + std::to_string(r));
  return c0[s][r - 1];
}

LogExtension log_extend_step(const LogExtension& ext) {
  LogExtension out = ext;
  const int n = ext.level;
  const int q = 2 * ext.curve.g;
  const Poly& f = ext.curve.f;
  const Rank cnt = q_pow(q, n + 1);
  std::vector<FuncElem> hs;
  std::vector<OneForm> cs;
  hs.reserve(cnt);
  cs.reserve(cnt);
  for (Rank r = 1; r <= cnt; ++r) {
    // c^{r,0}_{n+1} = d h^{r,0}_{n+1} - alpha_{lead} h^{tail,0}_n
    //                 - sum_t c^{suffix(t),0}_t h^{prefix(t),t}_{n+1}
    OneForm target;
    if (n == 0) {
      target = ext.curve.alphas[r - 1];
    } else {
      Rank lead = psi(r, 0, n, q);
      Rank tail = r - (lead - 1) * q_pow(q, n);
      target = wf_mul(ext.h0[n][tail - 1], ext.curve.alphas[lead - 1], f);
      for (int t = 1; t <= n; ++t) {
        Rank pre = psi(r, 0, t, q);      // length n+1-t prefix
        Rank suf = phi(r, 0, t, q) + 1;  // length t suffix
        const OneForm& cf = ext.c0[t][suf - 1];
        const FuncElem& hf = ext.h0[n + 1 - t][pre - 1];  // h^{pre,t}_{n+1}
        if (!cf.zero() && !hf.zero()) target = wf_add(target, wf_mul(hf, cf, f));
      }
    }
    SolveHResult sol = solve_h(target, ext.curve);
    hs.push_back(std::move(sol.h));
    cs.push_back(std::move(sol.c));
  }
  out.h0.push_back(std::move(hs));
  out.c0.push_back(std::move(cs));
  out.level = n + 1;
  return out;
}

LogExtension log_extend(const CurveModel& curve, int level) {
  if (level < 0) throw OutOfRange("negative level");
  LogExtension ext{curve, 0, {{}}, {{}}};
  for (int s = 0; s < level; ++s) ext = log_extend_step(ext);
  return ext;
}

ConnMat universal_conn_matrix(const CurveModel& curve, int n) {
  if (n < 0) throw OutOfRange("negative level");
  const int q = 2 * curve.g;
  const Rank dim = basis_dim(n, q);
  ConnMat M{n, q, std::vector<std::vector<OneForm>>(dim, std::vector<OneForm>(dim))};
  // nabla(w) = -sum_i (A_i w) alpha_i for len(w) < n, i.e. column w has
  // entry -alpha_i in the row of the word A_i w
  for (int l = 0; l < n; ++l)
    for (Rank k = 1; k <= q_pow(q, l); ++k) {
      Rank col = basis_pos(WordKey{l, k}, n, q);
      for (int i = 0; i < q; ++i) {
        Rank row = basis_pos(WordKey{l + 1, i * q_pow(q, l) + k}, n, q);
        M.m[row - 1][col - 1] = wf_neg(curve.alphas[i]);
      }
    }
  return M;
}

ConnMat conn_prime_matrix(const LogExtension& ext, int n) {
  if (n < 0 || n > ext.level) throw OutOfRange("level " + std::to_string(n) + " not extended");
  const int q = 2 * ext.curve.g;
  const Rank dim = basis_dim(n, q);
  ConnMat M{n, q, std::vector<std::vector<OneForm>>(dim, std::vector<OneForm>(dim))};
  // row w^p_m, column block length i: the one column hit is the length-i
  // suffix of the row word, with entry c^{r,0}_{m-i} for the length m-i prefix
  for (int m = 1; m <= n; ++m)
    for (Rank p = 1; p <= q_pow(q, m); ++p) {
      Rank row = basis_pos(WordKey{m, p}, n, q);
      for (int i = 0; i < m; ++i) {
        Rank r = psi(p, 0, i, q);
        Rank k = p - (r - 1) * q_pow(q, i);
        Rank col = basis_pos(WordKey{i, k}, n, q);
        M.m[row - 1][col - 1] = ext.c0[m - i][r - 1];
      }
    }
  return M;
}

GaugeMat gauge_matrix(const LogExtension& ext, int n) {
  if (n < 0 || n > ext.level) throw OutOfRange("level " + std::to_string(n) + " not extended");
  const int q = 2 * ext.curve.g;
  const Rank dim = basis_dim(n, q);
  GaugeMat G{n, q, std::vector<std::vector<FuncElem>>(dim, std::vector<FuncElem>(dim))};
  for (Rank d = 1; d <= dim; ++d) G.m[d - 1][d - 1] = FuncElem::constant(1);
  for (int m = 1; m <= n; ++m)
    for (Rank p = 1; p <= q_pow(q, m); ++p) {
      Rank row = basis_pos(WordKey{m, p}, n, q);
      for (int i = 0; i < m; ++i) {
        Rank r = psi(p, 0, i, q);
        Rank k = p - (r - 1) * q_pow(q, i);
        Rank col = basis_pos(WordKey{i, k}, n, q);
        G.m[row - 1][col - 1] = ext.h0[m - i][r - 1];
      }
    }
  return G;
}

GaugeMat gauge_inverse(const GaugeMat& G, const CurveModel& curve) {
  const Rank dim = (Rank)G.m.size();
  const Poly& f = curve.f;
  GaugeMat X{G.n, G.q, std::vector<std::vector<FuncElem>>(dim, std::vector<FuncElem>(dim))};
  // G is unit upper triangular in basis order (longer words first), so each
  // column of G X = I falls to back-substitution
  for (Rank j = 0; j < dim; ++j)
    for (Rank i = dim - 1; i >= 0; --i) {
      FuncElem v = (i == j) ? FuncElem::constant(1) : FuncElem{};
      for (Rank k = i + 1; k < dim; ++k)
        if (!G.m[i][k].zero() && !X.m[k][j].zero())
          v = fe_sub(v, fe_mul(G.m[i][k], X.m[k][j], f));
      X.m[i][j] = std::move(v);
    }
  return X;
}

ConnMat gauge_of_connection(const ConnMat& C, const GaugeMat& G, const CurveModel& curve) {
  const Rank dim = (Rank)C.m.size();
  if ((Rank)G.m.size() != dim)
    throw DimensionMismatch("connection is " + std::to_string(dim) + "x" + std::to_string(dim) +
                            ", gauge is " + std::to_string(G.m.size()) + "x" +
                            std::to_string(G.m.size()));
  const Poly& f = curve.f;
  // R = C G + dG, then solve G C' = R column by column (G unit upper
  // triangular); this is exactly C' = G^{-1}(C G + dG) without ever forming
  // a full inverse
  std::vector<std::vector<OneForm>> R(dim, std::vector<OneForm>(dim));
  for (Rank i = 0; i < dim; ++i)
    for (Rank j = 0; j < dim; ++j) {
      OneForm v = fe_d(G.m[i][j], f);
      for (Rank k = 0; k < dim; ++k)
        if (!C.m[i][k].zero() && !G.m[k][j].zero())
          v = wf_add(v, wf_mul(G.m[k][j], C.m[i][k], f));
      R[i][j] = std::move(v);
    }
  ConnMat out{C.n, C.q, std::vector<std::vector<OneForm>>(dim, std::vector<OneForm>(dim))};
  for (Rank j = 0; j < dim; ++j)
    for (Rank i = dim - 1; i >= 0; --i) {
      OneForm v = R[i][j];
      for (Rank k = i + 1; k < dim; ++k)
        if (!G.m[i][k].zero() && !out.m[k][j].zero())
          v = wf_sub(v, wf_mul(G.m[i][k], out.m[k][j], f));
      out.m[i][j] = std::move(v);
    }
  return out;
}

TensorElem<FuncElem> gauge_apply_word(const LogExtension& ext, const WordKey& w) {
  const int n = ext.level;
  const int q = 2 * ext.curve.g;
  if (w.len < 0 || w.len > n || w.rank < 1 || w.rank > q_pow(q, w.len))
    throw OutOfRange("word outside the level-" + std::to_string(n) + " basis");
  TensorElem<FuncElem> out{n, q, {}};
  out.t.emplace(w, FuncElem::constant(1));
  // G_n(w^k_l) = w^k_l + sum_{s>l} sum_t w_s^{k+(t-1)(2g)^l} h^{t,l}_s
  for (int s = w.len + 1; s <= n; ++s) {
    Rank cnt = q_pow(q, s - w.len);
    for (Rank t = 1; t <= cnt; ++t) {
      const FuncElem& h = ext.h0[s - w.len][t - 1];
      if (!h.zero()) out.t.emplace(WordKey{s, w.rank + (t - 1) * q_pow(q, w.len)}, h);
    }
  }
  return out;
}

PoleReport verify_log_poles(const ConnMat& C, const CurveModel& curve) {
  PoleReport rep;
  rep.pass = true;
  const Rank dim = (Rank)C.m.size();
  for (Rank i = 0; i < dim; ++i)
    for (Rank j = 0; j < dim; ++j) {
      const OneForm& w = C.m[i][j];
      if (w.zero()) continue;
      PoleReportRow row;
      row.row = (int)i + 1;
      row.col = (int)j + 1;
      row.pole_order = form_pole_order(w, curve);
      row.log_ok = row.pole_order <= 1;
      row.affine_ok = affine_poles_only_over_x0(w.u, curve.f);
      if (!row.log_ok || !row.affine_ok) rep.pass = false;
      rep.rows.push_back(row);
    }
  return rep;
}

}  // namespace uam
