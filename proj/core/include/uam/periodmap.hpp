#pragma once
#include <vector>

#include "uam/extend.hpp"
#include "uam/hodge.hpp"
#include "uam/iisym.hpp"
#include "uam/tensor.hpp"

namespace uam {

enum class BasepointKind { rational, tangential };

// Canonical form labels for a curve at a given level. The list is
// prefix-stable as the level grows, so symbol words stay comparable across
// levels: alpha_i first ("a0", ...; for a tangential basepoint the top
// half are the infinity-regularised "ai'" = alpha_i - d h^{i+1,0}_1), then
// the correction forms of the extended connection, deduplicated by
// proportionality ("Fa0" and "a0'" for genus 1, otherwise "c{m}_{r}").
// Tangential basepoints need ext at level >= the requested level.
FormRegistry make_registry(const CurveModel& curve, BasepointKind kind, int level,
                           const LogExtension* ext);

// p^cr_n = sum over words w of (iterated integral from the basepoint of the
// forms dual to w) * w.  For a rational basepoint the dual forms are the
// alpha letters of w; for the tangential basepoint at infinity they are read
// off the extended connection C'_n by parallel transport (MissingExtension
// without ext at level >= n).
TensorElem<IIPoly> pcr_symbolic(int n, const CurveModel& curve, BasepointKind kind,
                                const LogExtension* ext, FormRegistry& reg);

// Fiber of F^0 at the basepoint: the unit plus the generators with head
// length >= 1 evaluated there (rational: at b; tangential: the constant term
// at infinity of the Y-chart sections), as rational tensors.
std::vector<TensorElem<Rat>> f0_fiber(const HodgeGenerators& gens, BasepointKind kind);

struct PeriodMapResult {
  int level = 0;
  BasepointKind kind = BasepointKind::rational;
  CurveModel curve;  // as supplied by the caller (no formal basepoint patch)
  // log of the two factors of p^cr_n = exp(h) exp(u): hodge_factor spans
  // primitive F^0 directions, u represents the unipotent Albanese
  // coordinates j^dr_n in the Lyndon bracket basis
  LieExpr<IIPoly> u;
  LieExpr<IIPoly> hodge_factor;
  FormRegistry registry;
  TensorElem<IIPoly> pcr, u_tensor, h_tensor;
};

// Full pipeline at level n.  Supported levels: n <= 4 for genus 1 rational,
// n <= 3 for genus 1 tangential, n <= 2 otherwise (UnsupportedLevel beyond).
PeriodMapResult period_map(int n, const CurveModel& curve, BasepointKind kind);

// One induction step: lift the Hodge factor of prev along the level-n F^0
// generators and peel the new length-n part off pcr_n.  NonPrimitiveLift
// when a lifted direction fails to be primitive (the defect then shows up
// below length n, or on a top single-letter coordinate of u).
PeriodMapResult decompose_step(const PeriodMapResult& prev, const TensorElem<IIPoly>& pcr_n,
                               const HodgeGenerators& f0);

}  // namespace uam
