#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "uam/funcfield.hpp"

namespace uam {

enum class BasisChoice { standard, custom };
enum class FChoice { standard, custom };

// An odd affine model y^2 = f(x), deg f = 2g+1, f squarefree, together with
// the chosen basis of H^1-representing forms alpha_0..alpha_{2g-1} and the
// order-1-pole-at-infinity function F used to express logarithmic gauge
// entries. The local parameter at infinity is pi = x^g/y throughout, so the
// standard F = y/x^g is exactly 1/pi.
struct CurveModel {
  Poly f;
  int g = 1;
  std::vector<OneForm> alphas;
  FuncElem F;
  std::optional<std::pair<Rat, Rat>> basepoint;
};

// Validates everything: NotOddModel (degree/genus mismatch), SingularCurve
// (f not squarefree), BadBasis (first g forms not regular, or wrong pole
// structure), BadF (pole order at infinity != 1), InvalidInput (basepoint not
// on the curve).
CurveModel curve_new(const Poly& f, int genus,
                     BasisChoice basis_choice = BasisChoice::standard,
                     const std::vector<OneForm>& custom_basis = {},
                     FChoice f_choice = FChoice::standard,
                     const FuncElem& custom_F = {},
                     std::optional<std::pair<Rat, Rat>> basepoint = std::nullopt);

// alpha_i for the standard basis: x^i dx / y.
OneForm standard_alpha(const Poly& f, int g, int i);

}  // namespace uam
