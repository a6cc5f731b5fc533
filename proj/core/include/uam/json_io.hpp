#pragma once
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "uam/curve.hpp"
#include "uam/evalnum.hpp"
#include "uam/extend.hpp"
#include "uam/hodge.hpp"
#include "uam/periodmap.hpp"
#include "uam/series.hpp"

namespace uam {

// Insertion-ordered JSON: field order is fixed by the serializer code, so
// repeated runs are byte-identical and the files stay human-readable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" (or "p"); integers are also accepted on input.
// parse_rat canonicalizes, since raw p/q pairs straight from a string are not
// reduced and exact comparison assumes reduced form.
Rat parse_rat(const Json& j);

// Poly: ascending array of rational strings, [c0, c1, ...].
Json poly_json(const Poly& p);
Poly parse_poly(const Json& j);

// FuncElem a + b y with a = a_num/a_den, b = b_num/b_den.
Json funcelem_json(const FuncElem& e);
FuncElem parse_funcelem(const Json& j);

// A one-form is serialized by its coefficient against dx.
Json oneform_json(const OneForm& w);
OneForm parse_oneform(const Json& j);

// LaurentSeries: {"val": v, "coeffs": [...]} plus "trunc" when inexact.
Json lser_json(const LaurentSeries& s);
LaurentSeries parse_lser(const Json& j);

// LogVal = polynomial in the log symbol: {"0": "c0", "1": "c1", ...}.
Json logval_json(const LogVal& v);
LogVal parse_logval(const Json& j);

// TensorElem: {"n": n, "g": g, "terms": [{"len", "rank", "coeff"}]}.
Json tensor_json(const TensorElem<Rat>& e);
Json tensor_json(const TensorElem<FuncElem>& e);
TensorElem<Rat> parse_tensor_rat(const Json& j);
TensorElem<FuncElem> parse_tensor_func(const Json& j);

// CurveModel: {"f", "genus", "basepoint", "alphas", "F"}; basepoint is null
// or {"x", "y"}. The basis and F are always written so custom models round-trip.
Json curve_json(const CurveModel& c);
CurveModel parse_curve(const Json& j);

// Logarithmic extension: base entries h^{r,0}_i and c^{r,0}_i as
// {"level", "curve", "h": [{"i", "r", "elem"}], "c": [...],
//  "lambda_like_constants"}; the shifted entries h^{r,i}_m are all equal to
// base entries, so only the base layer is stored. Constants are filled for
// genus 1 and left empty otherwise.
Json extend_json(const LogExtension& ext);
LogExtension parse_extend(const Json& j);

// Hodge generators: {"level", "curve", "generators":
// [{"m", "f", "terms", "terms_y"}], "constants"}; terms/terms_y are the
// lifts over the two charts in the TensorElem terms shape.
Json hodge_json(const HodgeGenerators& gens);
HodgeGenerators parse_hodge(const Json& j);

// Period map: bracket-basis coordinates of u and of the Hodge factor as
// [{"bracket": "[[A0,A1],A1]", "coeff": [{"word": ["a0","a1","a1"],
//   "scalar": "p/q"}]}] next to the form registry ("forms") and the resolved
// constants table. Scalars are the already-resolved rationals; the constants
// block records what lambda, mu, kappa, nu evaluate to on this curve.
// parse_periodmap rebuilds the derived tensors (pcr = exp(h) exp(u)).
Json periodmap_json(const PeriodMapResult& r);
PeriodMapResult parse_periodmap(const Json& j);

// eval inputs: forms file is an array of {"label"?, "val", "coeffs", ...}
// (labels default to w0, w1, ...); the oracle file is a flat object keyed by
// space-joined label words.
std::vector<std::pair<std::string, LaurentSeries>> parse_eval_forms(const Json& j);
MapOracle parse_oracle(const Json& j);

}  // namespace uam
