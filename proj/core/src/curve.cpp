#include "uam/curve.hpp"

#include "uam/expand.hpp"

namespace uam {

OneForm standard_alpha(const Poly& f, int g, int i) {
  (void)g;
  // x^i dx / y = x^i * (y/f) * y dx ... stored as (x^i / f) * y * dx
  return {FuncElem{RatFn(), RatFn(Poly::monomial(1, i), f)}};
}

namespace {

// A form u dx with u = a(x) + b(x) y is regular on the affine curve exactly
// when a is a polynomial and b*f is a polynomial: u dx = a dx + (b f) dx/y,
// and dx/y is regular everywhere on the affine chart (at Weierstrass points
// dx/y = 2 dy/f'(x) with f squarefree).
bool regular_on_affine(const OneForm& w, const Poly& f) {
  if (!w.u.a.is_poly()) return false;
  RatFn bf = w.u.b * RatFn::of(f);
  return bf.is_poly();
}

}  // namespace

CurveModel curve_new(const Poly& f, int genus, BasisChoice basis_choice,
                     const std::vector<OneForm>& custom_basis, FChoice f_choice,
                     const FuncElem& custom_F, std::optional<std::pair<Rat, Rat>> basepoint) {
  if (genus < 1) throw NotOddModel("genus must be at least 1");
  if (!squarefree(f)) throw SingularCurve("f has a repeated root");
  if (f.deg() != 2 * genus + 1)
    throw NotOddModel("deg f = " + std::to_string(f.deg()) + " but an odd model of genus " +
                      std::to_string(genus) + " needs degree " + std::to_string(2 * genus + 1));

  CurveModel C;
  C.f = f;
  C.g = genus;

  if (basis_choice == BasisChoice::standard) {
    for (int i = 0; i < 2 * genus; ++i) C.alphas.push_back(standard_alpha(f, genus, i));
  } else {
    if ((int)custom_basis.size() != 2 * genus)
      throw BadBasis("need exactly 2g basis forms, got " + std::to_string(custom_basis.size()));
    C.alphas = custom_basis;
  }

  if (f_choice == FChoice::standard) {
    // y/x^g = 1/pi exactly
    C.F = FuncElem{RatFn(), RatFn(Poly::constant(1), Poly::monomial(1, genus))};
  } else {
    C.F = custom_F;
  }

  // Validate the basis: every form regular on the affine curve, the first g
  // regular at infinity too, the last g with poles at infinity only.
  for (int i = 0; i < 2 * genus; ++i) {
    if (C.alphas[i].zero()) throw BadBasis("basis form " + std::to_string(i) + " is zero");
    if (!regular_on_affine(C.alphas[i], f))
      throw BadBasis("basis form " + std::to_string(i) + " has poles on the affine curve");
    int p = form_pole_order(C.alphas[i], C);
    if (i < genus && p > 0)
      throw BadBasis("basis form " + std::to_string(i) + " must be regular at infinity but has pole order " +
                     std::to_string(p));
    if (i >= genus && p <= 0)
      throw BadBasis("basis form " + std::to_string(i) + " must have a pole at infinity");
  }

  if (C.F.zero() || pole_order_at_infinity(C.F, C) != 1)
    throw BadF("F must have pole order exactly 1 at infinity");

  if (basepoint) {
    const auto& [bx, by] = *basepoint;
    if (by * by != eval(f, bx))
      throw InvalidInput("basepoint (" + rat_str(bx) + ", " + rat_str(by) + ") is not on y^2 = f(x)");
    C.basepoint = basepoint;
  }
  return C;
}

}  // namespace uam
