#include "uam/hodge.hpp"

#include <algorithm>

#include "uam/word.hpp"

namespace uam {

std::vector<Rank> f_index_set(int n, int g) {
  if (n < 0 || g < 1) throw InvalidInput("f_index_set needs n >= 0 and g >= 1");
  std::vector<Rank> cur{1};
  Rank base = 1;  // (2g)^m
  for (int m = 0; m < n; ++m) {
    std::vector<Rank> next;
    next.reserve(cur.size() * (size_t)g);
    for (Rank f : cur)
      for (int t = g; t <= 2 * g - 1; ++t) next.push_back(f + Rank(t) * base);
    base *= Rank(2 * g);
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

bool in_f_index_set(Rank f, int len, int g) {
  if (len < 0 || g < 1 || f < 1 || f > q_pow(2 * g, len)) return false;
  Rank d = f - 1;
  for (int j = 0; j < len; ++j) {
    if (d % (2 * g) < g) return false;
    d /= 2 * g;
  }
  return true;
}

const FuncElem& HodgeGenerators::a_coeff(int m, Rank f, int l, Rank k) const {
  if (m < 0 || m >= (int)a.size()) throw OutOfRange("no correction table at depth m");
  auto it = a[m].find(f);
  if (it == a[m].end()) throw OutOfRange("f is not an index of a generator");
  if (l < m + 1 || l > level) throw OutOfRange("correction level l out of range");
  const auto& row = it->second[l - (m + 1)];
  if (k < 1 || k > (Rank)row.size()) throw OutOfRange("word rank k out of range");
  return row[k - 1];
}

const FuncElem& HodgeGenerators::b_coeff(int m, Rank f, int l, Rank k) const {
  if (m < 0 || m >= (int)b.size()) throw OutOfRange("no correction table at depth m");
  auto it = b[m].find(f);
  if (it == b[m].end()) throw OutOfRange("f is not an index of a generator");
  if (l < m + 1 || l > level) throw OutOfRange("correction level l out of range");
  const auto& row = it->second[l - (m + 1)];
  if (k < 1 || k > (Rank)row.size()) throw OutOfRange("word rank k out of range");
  return row[k - 1];
}

TensorElem<FuncElem> HodgeGenerators::generator(int m, Rank f, bool over_y) const {
  if (m < 0 || m > level || !in_f_index_set(f, m, curve.g))
    throw OutOfRange("generator index (m, f) out of range");
  TensorElem<FuncElem> e{level, q(), {}};
  e.t.emplace(WordKey{m, f}, FuncElem::constant(1));
  if (m < level) {
    const auto& tab = (over_y ? b : a)[m].at(f);
    for (int l = m + 1; l <= level; ++l)
      for (Rank k = 1; k <= (Rank)tab[l - (m + 1)].size(); ++k)
        if (!tab[l - (m + 1)][k - 1].zero()) e.t.emplace(WordKey{l, k}, tab[l - (m + 1)][k - 1]);
  }
  return e;
}

HodgeGenerators hodge_initial(const CurveModel& curve) {
  HodgeGenerators g;
  g.curve = curve;
  g.level = 0;
  return g;
}

namespace {

// Per-(f, k) stage data of one lifting step, indexed by the depth m.
struct StageTables {
  // s^{n+1,k}_{m,f} and the absorbed polynomial part A^{n+1,k}_{m,f}
  std::vector<std::map<Rank, std::vector<FuncElem>>> s, A;
  // lam[p][f'][k-1] = lambda^{n+1,k}_{p,f'}, produced while peeling stage p-1
  std::vector<std::map<Rank, std::vector<Rat>>> lam;
};

// b^{n+1,k}_{p,f'} minus its own lambda: everything known once stage p is done.
FuncElem b_minus_lambda(const StageTables& st, const LogExtension& ext, int n, int p, Rank fp,
                        Rank k) {
  const int g = ext.curve.g;
  FuncElem r = fe_add(st.A[p].at(fp)[k - 1], st.s[p].at(fp)[k - 1]);
  if (p + 1 <= n) {
    const Rank qp = q_pow(2 * g, p);
    for (int t = g + 1; t <= 2 * g; ++t) {
      const Rat& la = st.lam[p + 1].at(fp + Rank(t - 1) * qp)[k - 1];
      if (is_zero(la)) continue;
      r = fe_sub(r, fe_scale(la, ext.h_entry(p + 1, t, p)));
    }
  }
  return r;
}

FuncElem b_full(const StageTables& st, const LogExtension& ext, int n, int p, Rank fp, Rank k) {
  FuncElem r = b_minus_lambda(st, ext, n, p, fp, k);
  const Rat& la = st.lam[p].at(fp)[k - 1];
  if (!is_zero(la)) r = fe_add(r, FuncElem::constant(la));
  return r;
}

}  // namespace

HodgeGenerators hodge_f0_step(const HodgeGenerators& gens, const LogExtension& ext,
                              bool reverse_order) {
  const CurveModel& C = gens.curve;
  const int g = C.g, q = 2 * g, n = gens.level;
  if (!C.basepoint) throw InvalidInput("the hodge filtration step needs a rational basepoint");
  if (ext.curve.f.c != C.f.c || ext.curve.g != g)
    throw InvalidInput("extension data belongs to a different curve");
  if (ext.level < n + 1)
    throw DimensionMismatch("extension level " + std::to_string(ext.level) +
                            " too small for a step from level " + std::to_string(n));

  const Rank Q = q_pow(q, n + 1);
  std::vector<char> in_top(Q + 1, 0);  // k in F_{n+1}?
  for (Rank f : f_index_set(n + 1, g)) in_top[f] = 1;

  StageTables st;
  st.s.resize(n + 1);
  st.A.resize(n + 1);
  st.lam.resize(n + 1);
  std::vector<std::vector<Rank>> fsets(n + 1);
  for (int m = 0; m <= n; ++m) {
    fsets[m] = f_index_set(m, g);
    for (Rank f : fsets[m]) {
      st.s[m][f].assign(Q, FuncElem{});
      st.A[m][f].assign(Q, FuncElem{});
      if (m >= 1) st.lam[m][f].assign(Q, Rat(0));
    }
  }

  for (int m = n; m >= 0; --m) {
    std::vector<Rank> forder = fsets[m];
    if (reverse_order) std::reverse(forder.begin(), forder.end());
    for (Rank f : forder) {
      for (Rank ki = 1; ki <= Q; ++ki) {
        const Rank k = reverse_order ? Q + 1 - ki : ki;
        if (in_top[k]) continue;

        // the gluing defect s^{n+1,k}_{m,f}
        FuncElem s;
        if (tau(k, f, m, q)) {
          const FuncElem& h = ext.h_entry(n + 1, psi(k, 0, m, q), m);
          if (!h.zero()) s = h;
        }
        if (m < n) {
          for (int l = m + 1; l <= n; ++l) {
            const Rank ps = psi(k, 0, l, q);
            const FuncElem& h = ext.h_entry(n + 1, ps, l);
            if (h.zero()) continue;
            const FuncElem& al = gens.a_coeff(m, f, l, k - (ps - 1) * q_pow(q, l));
            if (al.zero()) continue;
            s = fe_add(s, fe_mul(al, h, C.f));
          }
          for (Rank fp : fsets[m + 1]) {
            if (!tau(fp, f, m, q)) continue;
            const FuncElem& h = ext.h_entry(m + 1, psi(fp, 0, m, q), m);
            if (h.zero()) continue;
            FuncElem bm = b_minus_lambda(st, ext, n, m + 1, fp, k);
            if (bm.zero()) continue;
            s = fe_sub(s, fe_mul(bm, h, C.f));
          }
          for (int p = m + 2; p <= n; ++p)
            for (Rank fp : fsets[p]) {
              if (!tau(fp, f, m, q)) continue;
              const FuncElem& h = ext.h_entry(p, psi(fp, 0, m, q), m);
              if (h.zero()) continue;
              FuncElem bf = b_full(st, ext, n, p, fp, k);
              if (bf.zero()) continue;
              s = fe_sub(s, fe_mul(bf, h, C.f));
            }
        }
        st.s[m][f][k - 1] = s;
        if (m == n || s.zero()) continue;  // nothing to peel

        // remove the principal part at infinity: polynomial part first,
        // then the odd orders 2g-1, 2g-3, .. via the gauge functions
        // h^{t,0}_1 (yielding the lambda constants) interleaved with the
        // even orders below 2g via powers of x
        const int pord = pole_order_at_infinity(s, C);
        Expander ex(C, std::max(pord, 2 * g) + 2 * g + 8);
        PrincipalPartResult pp = principal_part_solve(ls_neg(ex.expand(s)), C, ex, 2 * g);
        FuncElem A = pp.A;
        LaurentSeries resid = ls_neg(pp.residual);  // = expansion of A + s
        for (int t = 2 * g; t >= g + 1; --t) {
          const int d = 2 * (t - g) - 1;
          const Rat mu = resid.coeff(-d);
          const FuncElem& ht = ext.h_entry(1, t, 0);
          Rat eta = ht.zero() ? Rat(0) : ex.expand(ht).coeff(-d);
          if (is_zero(eta)) {
            if (!is_zero(mu))
              throw ObstructionFound("pole order " + std::to_string(d) +
                                     " survives at infinity and no gauge function removes it");
          } else if (!is_zero(mu)) {
            const Rat la = mu / eta;
            st.lam[m + 1][f + Rank(t - 1) * q_pow(q, m)][k - 1] = la;
            resid = ls_sub(resid, ls_qscale(la, ex.expand(ht)));
          }
          if (t > g + 1 || g == 1) {  // for g = 1 this removes the constant term
            const int d2 = 2 * (t - g) - 2;
            const Rat mu2 = resid.coeff(-d2);
            if (!is_zero(mu2)) {
              const int pw = t - g - 1;
              LaurentSeries xe = ex.x_pow(pw);
              const Rat co = mu2 / xe.coeff(-2 * pw);
              A = fe_sub(A, fe_scale(co, FuncElem::of_x(Poly::monomial(Rat(1), pw))));
              resid = ls_sub(resid, ls_qscale(co, xe));
            }
          }
        }
        if (resid.ord() < (g == 1 ? 1 : 0))
          throw ObstructionFound("principal part survives after peeling");
        st.A[m][f][k - 1] = A;
      }
    }
  }

  // assemble the new generator tables
  HodgeGenerators out;
  out.curve = C;
  out.level = n + 1;
  out.a.resize(n + 1);
  out.b.resize(n + 1);
  for (int m = 0; m <= n; ++m)
    for (Rank f : fsets[m]) {
      auto& ta = out.a[m][f];
      auto& tb = out.b[m][f];
      if (m < n) {
        ta = gens.a[m].at(f);
        tb = gens.b[m].at(f);
      }
      ta.emplace_back(Q, FuncElem{});
      tb.emplace_back(Q, FuncElem{});
    }

  const Rat xb = C.basepoint->first, yb = C.basepoint->second;
  for (int m = 0; m <= n; ++m)
    for (Rank f : fsets[m])
      for (Rank k = 1; k <= Q; ++k) {
        if (in_top[k]) continue;
        FuncElem a = st.A[m][f][k - 1];
        if (m >= 1) {
          const Rat& la = st.lam[m].at(f)[k - 1];
          if (!is_zero(la)) a = fe_add(a, FuncElem::constant(la));
        } else {
          const Rat v = fe_eval(a, xb, yb);
          if (!is_zero(v)) a = fe_sub(a, FuncElem::constant(v));
        }
        out.a[m][f].back()[k - 1] = a;
        FuncElem b = fe_add(a, st.s[m][f][k - 1]);
        if (m + 1 <= n) {
          const Rank qm = q_pow(q, m);
          for (int t = g + 1; t <= 2 * g; ++t) {
            const Rat& la = st.lam[m + 1].at(f + Rank(t - 1) * qm)[k - 1];
            if (is_zero(la)) continue;
            b = fe_sub(b, fe_scale(la, ext.h_entry(m + 1, t, m)));
          }
        }
        out.b[m][f].back()[k - 1] = b;
      }
  return out;
}

HodgeGenerators hodge_run(const CurveModel& curve, int level) {
  if (level < 0) throw InvalidInput("negative level");
  if (!curve.basepoint) throw InvalidInput("the hodge filtration needs a rational basepoint");
  HodgeGenerators g = hodge_initial(curve);
  if (level == 0) return g;
  LogExtension ext = log_extend(curve, level);
  for (int n = 0; n < level; ++n) g = hodge_f0_step(g, ext);
  return g;
}

ImReport check_conditions_Im(const HodgeGenerators& gens, const LogExtension& ext) {
  const CurveModel& C = gens.curve;
  const int g = C.g, q = 2 * g, N = gens.level;
  if (ext.level < N) throw DimensionMismatch("extension level too small for the generators");
  ImReport rep;
  if (N == 0) return rep;

  const Rank Q = q_pow(q, N);
  std::vector<char> in_top(Q + 1, 0);
  for (Rank f : f_index_set(N, g)) in_top[f] = 1;
  std::vector<std::vector<Rank>> fsets(N);
  for (int m = 0; m < N; ++m) fsets[m] = f_index_set(m, g);

  const bool have_b = C.basepoint.has_value();
  for (int m = N - 1; m >= 0; --m)
    for (Rank f : fsets[m])
      for (Rank k = 1; k <= Q; ++k) {
        FuncElem rhs = gens.a_coeff(m, f, N, k);
        if (tau(k, f, m, q) && !in_top[k]) {
          const FuncElem& h = ext.h_entry(N, psi(k, 0, m, q), m);
          if (!h.zero()) rhs = fe_add(rhs, h);
        }
        for (int l = m + 1; l <= N - 1; ++l) {
          const Rank ps = psi(k, 0, l, q);
          const FuncElem& h = ext.h_entry(N, ps, l);
          if (h.zero()) continue;
          const FuncElem& al = gens.a_coeff(m, f, l, k - (ps - 1) * q_pow(q, l));
          if (al.zero()) continue;
          rhs = fe_add(rhs, fe_mul(al, h, C.f));
        }
        for (int p = m + 1; p <= N - 1; ++p)
          for (Rank fp : fsets[p]) {
            if (!tau(fp, f, m, q)) continue;
            const FuncElem& h = ext.h_entry(p, psi(fp, 0, m, q), m);
            if (h.zero()) continue;
            const FuncElem& bc = gens.b_coeff(p, fp, N, k);
            if (bc.zero()) continue;
            rhs = fe_sub(rhs, fe_mul(bc, h, C.f));
          }
        ImReportRow row;
        row.m = m;
        row.f = f;
        row.k = k;
        row.identity_ok = (gens.b_coeff(m, f, N, k) == rhs);
        if (m == 0 && have_b)
          row.basepoint_ok =
              is_zero(fe_eval(gens.a_coeff(0, 1, N, k), C.basepoint->first, C.basepoint->second));
        rep.pass = rep.pass && row.identity_ok && row.basepoint_ok;
        rep.rows.push_back(row);
      }
  return rep;
}

HodgeConstants hodge_constants(const CurveModel& curve) {
  if (curve.g != 1) throw NotElliptic("the hodge constants lambda, mu, kappa, nu need genus 1");
  LogExtension ext = log_extend(curve, 1);
  const FuncElem& F = ext.h0[1][1];  // h^{2,0}_1
  const Poly& f = curve.f;
  Expander ex(curve, 8);

  OneForm dF = fe_d(F, f);
  const Rat cdF = ex.expand_form(dF).coeff(-2);
  if (is_zero(cdF)) throw UndecidableCoefficients("dF has no double pole at infinity");
  FuncElem F2 = fe_mul(F, F, f);

  HodgeConstants hc;
  // lambda dF - F^2/2 alpha_0 must drop to a log pole
  hc.lambda = ex.expand_form(wf_mul(fe_scale(Rat(1, 2), F2), curve.alphas[0], f)).coeff(-2) / cdF;
  // lambda/3 F dF + mu dF - F^3/6 alpha_0 must drop to a simple pole
  OneForm m3 = wf_sub(wf_mul(fe_scale(Rat(1, 6), fe_mul(F2, F, f)), curve.alphas[0], f),
                      wf_mul(fe_scale(hc.lambda / 3, F), dF, f));
  hc.mu = ex.expand_form(m3).coeff(-2) / cdF;
  // nu x + lambda F^2 regular at infinity
  const Rat chi = ex.expand(FuncElem::of_x(Poly::monomial(Rat(1), 1))).coeff(-2);
  if (is_zero(chi)) throw UndecidableCoefficients("x has no double pole at infinity");
  const LaurentSeries F2s = ex.expand(F2);
  hc.nu = -(hc.lambda * F2s.coeff(-2)) / chi;
  // nu x + kappa F + lambda F^2 regular at infinity
  const Rat cF = ex.expand(F).coeff(-1);
  if (is_zero(cF)) throw UndecidableCoefficients("F has no simple pole at infinity");
  hc.kappa = -(hc.nu * ex.expand(FuncElem::of_x(Poly::monomial(Rat(1), 1))).coeff(-1) +
               hc.lambda * F2s.coeff(-1)) /
             cF;
  return hc;
}

std::vector<TensorElem<FuncElem>> genus2_example(const CurveModel& curve) {
  if (curve.g != 2) throw InvalidInput("the worked example needs a genus-2 odd model");
  HodgeGenerators gens = hodge_run(curve, 2);
  std::vector<TensorElem<FuncElem>> out;
  for (int m = 0; m <= 2; ++m)
    for (Rank f : f_index_set(m, 2)) out.push_back(gens.generator(m, f));
  return out;
}

}  // namespace uam
