#include "uam/periodmap.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "uam/errors.hpp"
#include "uam/expand.hpp"

namespace uam {

FormRegistry make_registry(const CurveModel& curve, BasepointKind kind, int level,
                           const LogExtension* ext) {
  const int g = curve.g, q = 2 * g;
  FormRegistry reg;
  if (kind == BasepointKind::rational) {
    for (int i = 0; i < q; ++i) reg.add("a" + std::to_string(i), curve.alphas[i]);
    return reg;
  }
  if (!ext || ext->level < level)
    throw MissingExtension("tangential forms need the log extension at level >= " +
                           std::to_string(level));
  // alpha_i is regular at infinity for i < g; above that subtract the exact
  // part: ai' = alpha_i - d h^{i+1,0}_1 = -c^{i+1,0}_1
  for (int i = 0; i < g; ++i) reg.add("a" + std::to_string(i), curve.alphas[i]);
  for (int i = g; i < q; ++i)
    reg.add("a" + std::to_string(i) + "'", wf_neg(ext->c0[1][i]));
  if (g == 1 && level >= 2)
    reg.add("Fa0", wf_mul(ext->h0[1][1], curve.alphas[0], curve.f));
  if (g == 1 && level >= 3) reg.add("a0'", wf_neg(ext->c0[3][3]));
  for (int m = 2; m <= level; ++m)
    for (Rank r = 1; r <= q_pow(q, m); ++r) {
      const OneForm& c = ext->c0[m][r - 1];
      if (c.zero()) continue;
      reg.resolve(c, "c" + std::to_string(m) + "_" + std::to_string(r));
    }
  return reg;
}

TensorElem<IIPoly> pcr_symbolic(int n, const CurveModel& curve, BasepointKind kind,
                                const LogExtension* ext, FormRegistry& reg) {
  const int g = curve.g, q = 2 * g;
  if (n < 0) throw InvalidInput("negative level");
  TensorElem<IIPoly> p{n, q, {}};
  if (kind == BasepointKind::rational) {
    if (!curve.basepoint) throw InvalidInput("p^cr at a rational basepoint needs a basepoint");
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) {
      std::string lab = "a" + std::to_string(i);
      int j = reg.index_of(lab);
      idx[i] = j >= 0 ? j : reg.add(lab, curve.alphas[i]);
    }
    for (int l = 0; l <= n; ++l)
      for (Rank r = 1; r <= q_pow(q, l); ++r) {
        WordKey w{l, r};
        IIWord fw;
        for (int a : word_letters(w, q)) fw.push_back(idx[a]);
        p.t.emplace(w, ii_sym(fw));
      }
    return p;
  }
  if (!ext || ext->level < n)
    throw MissingExtension("tangential p^cr needs the log extension at level >= " +
                           std::to_string(n));
  // parallel transport of the extended connection from the tangential
  // basepoint: the coefficient of a basis word is the sum over chains of
  // -C' entries leading down to the empty word, integrated left to right
  ConnMat Cp = conn_prime_matrix(*ext, n);
  const Rank dim = basis_dim(n, q);
  std::vector<IIPoly> I((size_t)dim);
  I[(size_t)dim - 1] = IIPoly(1);
  for (Rank v = dim - 2; v >= 0; --v) {
    IIPoly acc;
    for (Rank j = v + 1; j < dim; ++j) {
      const OneForm& w = Cp.m[(size_t)v][(size_t)j];
      if (w.zero() || is_zero(I[(size_t)j])) continue;
      auto [s, fi] = reg.resolve(wf_neg(w), "w" + std::to_string(v) + "_" + std::to_string(j));
      acc = acc + qscale(s, ii_prepend(fi, I[(size_t)j]));
    }
    I[(size_t)v] = acc;
  }
  for (Rank pos = 0; pos < dim; ++pos)
    if (!is_zero(I[(size_t)pos])) p.t.emplace(basis_word(pos + 1, n, q), I[(size_t)pos]);
  return p;
}

std::vector<TensorElem<Rat>> f0_fiber(const HodgeGenerators& gens, BasepointKind kind) {
  const int n = gens.level, g = gens.curve.g, q = 2 * g;
  std::vector<TensorElem<Rat>> out;
  out.push_back(TensorElem<Rat>::unit(n, q));
  std::optional<Expander> ex;
  Rat xb = 0, yb = 0;
  if (kind == BasepointKind::tangential) {
    ex.emplace(gens.curve, 2 * q + 8);
  } else {
    if (!gens.curve.basepoint) throw InvalidInput("the rational fiber needs a basepoint");
    xb = gens.curve.basepoint->first;
    yb = gens.curve.basepoint->second;
  }
  for (int m = 1; m <= n; ++m)
    for (Rank f : f_index_set(m, g)) {
      TensorElem<FuncElem> G = gens.generator(m, f, kind == BasepointKind::tangential);
      TensorElem<Rat> E{n, q, {}};
      for (auto& [w, c] : G.t) {
        Rat v = kind == BasepointKind::tangential ? ex->expand(c).coeff(0) : fe_eval(c, xb, yb);
        if (!is_zero(v)) E.t.emplace(w, v);
      }
      out.push_back(std::move(E));
    }
  return out;
}

namespace {

// Reduced row echelon over the word basis; pivot of a row is its smallest
// word in the graded (length, rank) order and every other row is zero there.
struct EchelonBasis {
  std::vector<std::pair<WordKey, TensorElem<Rat>>> rows;  // ascending pivot

  TensorElem<Rat> reduce(TensorElem<Rat> v) const {
    for (auto& [p, e] : rows) {
      Rat c = v.coeff(p);
      if (!is_zero(c)) v = te_sub(v, te_qscale(c, e));
    }
    return v;
  }
  bool insert(TensorElem<Rat> v) {
    v = reduce(v);
    if (v.zero()) return false;
    WordKey p = v.t.begin()->first;
    v = te_qscale(1 / v.coeff(p), v);
    for (auto& [pp, e] : rows) {
      Rat c = e.coeff(p);
      if (!is_zero(c)) e = te_sub(e, te_qscale(c, v));
    }
    rows.emplace_back(p, std::move(v));
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }
};

// span of all truncated products of the given elements (unital: seed with 1)
EchelonBasis algebra_closure(const std::vector<TensorElem<Rat>>& gens) {
  EchelonBasis ech;
  for (auto& g : gens) ech.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = ech.rows;
    for (auto& [pa, a] : snapshot)
      for (auto& [pb, b] : snapshot) {
        if (pa.len == 0 || pb.len == 0) continue;  // products with 1 add nothing
        if (pa.len + pb.len > a.n) continue;       // pivot is the shortest word
        if (ech.insert(concat_mul(a, b))) grew = true;
      }
  }
  return ech;
}

// basis of the primitive elements inside the span of `basis`
std::vector<TensorElem<Rat>> primitive_subspace(const std::vector<TensorElem<Rat>>& basis, int n,
                                                int q) {
  if (basis.empty()) return {};
  const auto one = TensorElem<Rat>::unit(n, q);
  std::map<std::pair<WordKey, WordKey>, int> rowidx;
  std::vector<std::map<int, Rat>> cols(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    const auto& v = basis[i];
    auto defect = ts_add(coproduct(v), ts_neg(ts_add(ts_outer(v, one), ts_outer(one, v))));
    for (auto& [key, val] : defect.t) {
      auto it = rowidx.find(key);
      int r = it == rowidx.end() ? (rowidx[key] = (int)rowidx.size()) : it->second;
      cols[i][r] = val;
    }
  }
  const int nr = (int)rowidx.size(), nc = (int)basis.size();
  std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(nc, Rat(0)));
  for (int c = 0; c < nc; ++c)
    for (auto& [r, val] : cols[c]) M[r][c] = val;
  std::vector<int> pivot_row(nc, -1);
  int rank = 0;
  for (int c = 0; c < nc && rank < nr; ++c) {
    int sel = -1;
    for (int r = rank; r < nr; ++r)
      if (!is_zero(M[r][c])) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[rank]);
    Rat inv = 1 / M[rank][c];
    for (int cc = c; cc < nc; ++cc) M[rank][cc] *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == rank || is_zero(M[r][c])) continue;
      Rat s = M[r][c];
      for (int cc = c; cc < nc; ++cc) M[r][cc] -= s * M[rank][cc];
    }
    pivot_row[c] = rank++;
  }
  std::vector<TensorElem<Rat>> prims;
  for (int c = 0; c < nc; ++c) {
    if (pivot_row[c] >= 0) continue;
    TensorElem<Rat> v{n, q, {}};
    v = te_add(v, basis[(size_t)c]);
    for (int cc = 0; cc < nc; ++cc)
      if (pivot_row[cc] >= 0 && !is_zero(M[pivot_row[cc]][c]))
        v = te_sub(v, te_qscale(M[pivot_row[cc]][c], basis[(size_t)cc]));
    if (!v.zero()) prims.push_back(std::move(v));
  }
  return prims;
}

TensorElem<IIPoly> te_to_ii(const TensorElem<Rat>& a) {
  TensorElem<IIPoly> r{a.n, a.q, {}};
  for (auto& [w, c] : a.t) r.t.emplace(w, IIPoly(c));
  return r;
}

void check_no_top_letters(const TensorElem<IIPoly>& u, int g) {
  for (int f = g + 1; f <= 2 * g; ++f)
    if (!is_zero(u.coeff(WordKey{1, (Rank)f})))
      throw NonPrimitiveLift("no primitive F0 direction clears the single-letter coordinate A" +
                             std::to_string(f - 1));
}

struct DecompCore {
  TensorElem<IIPoly> h, u;
};

// peel the F0 factor off p^cr: walk the primitive pivots in graded order and
// move each matching coordinate of log(exp(-h) p) into h
DecompCore decompose_core(const TensorElem<IIPoly>& pcr, const EchelonBasis& prim_ech, int g) {
  TensorElem<IIPoly> h{pcr.n, pcr.q, {}};
  for (auto& [pw, e] : prim_ech.rows) {
    auto r = log_trunc(concat_mul(exp_trunc(te_neg(h)), pcr));
    IIPoly gamma = r.coeff(pw);
    if (!is_zero(gamma)) h = te_add(h, te_rscale(gamma, te_to_ii(e)));
  }
  TensorElem<IIPoly> u = log_trunc(concat_mul(exp_trunc(te_neg(h)), pcr));
  check_no_top_letters(u, g);
  if (!(concat_mul(exp_trunc(h), exp_trunc(u)) == pcr))
    throw ObstructionFound("decomposition identity failed to close");
  return {std::move(h), std::move(u)};
}

EchelonBasis primitive_echelon(const HodgeGenerators& gens, BasepointKind kind) {
  auto fiber = f0_fiber(gens, kind);
  auto closed = algebra_closure(fiber);
  std::vector<TensorElem<Rat>> basis;
  basis.reserve(closed.rows.size());
  for (auto& [p, e] : closed.rows) basis.push_back(e);
  EchelonBasis prim;
  for (auto& v : primitive_subspace(basis, fiber[0].n, fiber[0].q)) prim.insert(v);
  return prim;
}

LieExpr<IIPoly> to_lie(const TensorElem<IIPoly>& a) {
  LieExpr<IIPoly> e;
  e.n = a.n;
  e.q = a.q;
  try {
    e.terms = lie_coords(a);
  } catch (const InvalidInput& err) {
    throw NonPrimitiveLift(std::string("decomposition factor is not primitive: ") + err.what());
  }
  return e;
}

TensorElem<IIPoly> truncate_ii(const TensorElem<IIPoly>& a, int n) {
  TensorElem<IIPoly> r = a;
  r.n = n;
  for (auto it = r.t.begin(); it != r.t.end();)
    it = (it->first.len > n) ? r.t.erase(it) : std::next(it);
  return r;
}

}  // namespace

PeriodMapResult period_map(int n, const CurveModel& curve, BasepointKind kind) {
  const int g = curve.g;
  if (n < 1) throw InvalidInput("level must be >= 1");
  const int cap = kind == BasepointKind::rational ? (g == 1 ? 4 : 2) : (g == 1 ? 3 : 2);
  if (n > cap)
    throw UnsupportedLevel("level " + std::to_string(n) + " at genus " + std::to_string(g) +
                           " exceeds the supported range (" + std::to_string(cap) + ")");
  CurveModel cm = curve;
  if (kind == BasepointKind::tangential && !cm.basepoint) {
    // the tangential fiber only reads generator rows with head length >= 1,
    // which do not depend on the rational basepoint; any formal pair lets
    // the filtration pipeline normalise the (discarded) depth-0 row
    cm.basepoint = std::make_pair(Rat(0), Rat(0));
  }
  LogExtension ext = log_extend(cm, n);
  HodgeGenerators gens = hodge_initial(cm);
  for (int s = 0; s < n; ++s) gens = hodge_f0_step(gens, ext);
  FormRegistry reg = make_registry(cm, kind, n, &ext);
  TensorElem<IIPoly> pcr = pcr_symbolic(n, cm, kind, &ext, reg);
  EchelonBasis prim = primitive_echelon(gens, kind);
  DecompCore core = decompose_core(pcr, prim, g);
  PeriodMapResult res;
  res.level = n;
  res.kind = kind;
  res.curve = curve;
  res.registry = std::move(reg);
  res.pcr = std::move(pcr);
  res.h_tensor = std::move(core.h);
  res.u_tensor = std::move(core.u);
  res.u = to_lie(res.u_tensor);
  res.hodge_factor = to_lie(res.h_tensor);
  return res;
}

PeriodMapResult decompose_step(const PeriodMapResult& prev, const TensorElem<IIPoly>& pcr_n,
                               const HodgeGenerators& f0) {
  const int n = f0.level, g = f0.curve.g, q = 2 * g;
  if (prev.level != n - 1)
    throw InvalidInput("decompose_step needs generators one level above the previous result");
  if (pcr_n.n != n || pcr_n.q != q)
    throw DimensionMismatch("p^cr has level " + std::to_string(pcr_n.n) + ", alphabet " +
                            std::to_string(pcr_n.q) + "; expected " + std::to_string(n) + ", " +
                            std::to_string(q));
  EchelonBasis prim = primitive_echelon(f0, prev.kind);
  DecompCore core = decompose_core(pcr_n, prim, g);
  if (!(truncate_ii(core.u, n - 1) == prev.u_tensor))
    throw NonPrimitiveLift("the lift changes the decomposition below the new level");
  PeriodMapResult res;
  res.level = n;
  res.kind = prev.kind;
  res.curve = prev.curve;
  res.registry = prev.registry;
  res.pcr = pcr_n;
  res.h_tensor = std::move(core.h);
  res.u_tensor = std::move(core.u);
  res.u = to_lie(res.u_tensor);
  res.hodge_factor = to_lie(res.h_tensor);
  return res;
}

}  // namespace uam
