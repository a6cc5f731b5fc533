#include "uam/json_io.hpp"

#include <cctype>

#include "uam/word.hpp"

namespace uam {
namespace {

void req(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

const Json& field(const Json& j, const char* key) {
  req(j.is_object(), std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  req(it != j.end(), std::string("missing field \"") + key + "\"");
  return *it;
}

long long parse_int(const Json& j, const char* what) {
  req(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<long long>();
}

// terms array shared by TensorElem and the hodge generator lists
template <class R, class ToJson>
Json terms_json(const TensorElem<R>& e, ToJson&& coeff_json) {
  Json terms = Json::array();
  for (const auto& [w, v] : e.t) {
    if (is_zero(v)) continue;
    Json t;
    t["len"] = w.len;
    t["rank"] = w.rank;
    t["coeff"] = coeff_json(v);
    terms.push_back(std::move(t));
  }
  return terms;
}

template <class R, class Parse>
void parse_terms_into(const Json& terms, TensorElem<R>& e, Parse&& parse_coeff) {
  req(terms.is_array(), "\"terms\" must be an array");
  for (const Json& t : terms) {
    int len = (int)parse_int(field(t, "len"), "term length");
    Rank rank = (Rank)parse_int(field(t, "rank"), "term rank");
    req(len >= 0 && len <= e.n, "term length out of range");
    req(rank >= 1 && rank <= q_pow(e.q, len), "term rank out of range");
    R v = parse_coeff(field(t, "coeff"));
    if (!is_zero(v)) {
      bool fresh = e.t.emplace(WordKey{len, rank}, std::move(v)).second;
      req(fresh, "duplicate term for one word");
    }
  }
}

Json constants_json(const CurveModel& curve) {
  Json c = Json::object();
  if (curve.g == 1) {
    HodgeConstants hc = hodge_constants(curve);
    c["lambda"] = rat_str(hc.lambda);
    c["mu"] = rat_str(hc.mu);
    c["kappa"] = rat_str(hc.kappa);
    c["nu"] = rat_str(hc.nu);
  }
  return c;
}

Json iipoly_json(const IIPoly& p, const FormRegistry& reg) {
  Json out = Json::array();
  for (const auto& [mono, s] : p.t) {
    req(mono.size() <= 1, "coefficient is not in shuffle normal form");
    Json words = Json::array();
    if (!mono.empty())
      for (int idx : mono[0]) words.push_back(reg.label(idx));
    Json entry;
    entry["word"] = std::move(words);
    entry["scalar"] = rat_str(s);
    out.push_back(std::move(entry));
  }
  return out;
}

IIPoly parse_iipoly(const Json& j, const FormRegistry& reg) {
  req(j.is_array(), "coefficient must be an array of {word, scalar}");
  IIPoly p;
  for (const Json& entry : j) {
    const Json& wj = field(entry, "word");
    req(wj.is_array(), "\"word\" must be an array of labels");
    IIWord w;
    for (const Json& lab : wj) {
      req(lab.is_string(), "form labels must be strings");
      int idx = reg.index_of(lab.get<std::string>());
      req(idx >= 0, "unknown form label \"" + lab.get<std::string>() + "\"");
      w.push_back(idx);
    }
    Rat s = parse_rat(field(entry, "scalar"));
    if (is_zero(s)) continue;
    IIMono m;
    if (!w.empty()) m.push_back(std::move(w));
    auto [it, fresh] = p.t.emplace(std::move(m), s);
    if (!fresh) {
      it->second += s;
      if (is_zero(it->second)) p.t.erase(it);
    }
  }
  return p;
}

Json lie_json(const LieExpr<IIPoly>& e, const FormRegistry& reg) {
  Json out = Json::array();
  for (const auto& [b, c] : e.terms) {
    Json entry;
    entry["bracket"] = bracket_str(b);
    entry["coeff"] = iipoly_json(c, reg);
    out.push_back(std::move(entry));
  }
  return out;
}

LieExpr<IIPoly> parse_lie(const Json& j, int n, int q, const FormRegistry& reg) {
  req(j.is_array(), "bracket list must be an array");
  LieExpr<IIPoly> e{n, q, {}};
  for (const Json& entry : j) {
    const Json& bj = field(entry, "bracket");
    req(bj.is_string(), "\"bracket\" must be a string");
    e.terms.emplace_back(bracket_parse(bj.get<std::string>()),
                         parse_iipoly(field(entry, "coeff"), reg));
  }
  return e;
}

}  // namespace

Rat parse_rat(const Json& j) {
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  req(j.is_string(), "rational must be \"p/q\" or an integer");
  const std::string s = j.get<std::string>();
  // strict format: -?digits(/digits)?  (GMP itself would skip whitespace)
  size_t i = 0, slash = std::string::npos;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  for (; i < s.size(); ++i) {
    if (std::isdigit((unsigned char)s[i])) {
      ++digits;
    } else if (s[i] == '/' && slash == std::string::npos && digits > 0) {
      slash = i;
      digits = 0;
    } else {
      digits = 0;
      break;
    }
  }
  req(digits > 0 && i == s.size(), "malformed rational \"" + s + "\"");
  Rat r(s);
  req(sgn(r.get_den()) != 0, "zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const Rat& c : p.c) a.push_back(rat_str(c));
  return a;
}

Poly parse_poly(const Json& j) {
  req(j.is_array(), "polynomial must be an array of coefficients");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const Json& e : j) c.push_back(parse_rat(e));
  return Poly(std::move(c));
}

Json funcelem_json(const FuncElem& e) {
  Json j;
  j["a_num"] = poly_json(e.a.num);
  j["a_den"] = poly_json(e.a.den);
  j["b_num"] = poly_json(e.b.num);
  j["b_den"] = poly_json(e.b.den);
  return j;
}

FuncElem parse_funcelem(const Json& j) {
  FuncElem e;
  e.a = RatFn(parse_poly(field(j, "a_num")), parse_poly(field(j, "a_den")));
  e.b = RatFn(parse_poly(field(j, "b_num")), parse_poly(field(j, "b_den")));
  return e;
}

Json oneform_json(const OneForm& w) { return funcelem_json(w.u); }

OneForm parse_oneform(const Json& j) { return OneForm{parse_funcelem(j)}; }

Json lser_json(const LaurentSeries& s) {
  Json j;
  j["val"] = s.zero() ? 0 : s.val;
  Json coeffs = Json::array();
  for (const Rat& c : s.c) coeffs.push_back(rat_str(c));
  j["coeffs"] = std::move(coeffs);
  if (!s.exact()) j["trunc"] = s.trunc;
  return j;
}

LaurentSeries parse_lser(const Json& j) {
  LaurentSeries s;
  s.val = (int)parse_int(field(j, "val"), "\"val\"");
  const Json& coeffs = field(j, "coeffs");
  req(coeffs.is_array(), "\"coeffs\" must be an array");
  for (const Json& c : coeffs) s.c.push_back(parse_rat(c));
  if (j.contains("trunc")) {
    s.trunc = (int)parse_int(j.at("trunc"), "\"trunc\"");
    req(s.trunc < EXACT_ORD, "\"trunc\" out of range");
  }
  req((int)s.c.size() <= s.trunc - s.val + 1 || s.c.empty() || s.exact(),
      "more coefficients than the reliable window holds");
  s.normalize();
  return s;
}

Json logval_json(const LogVal& v) {
  Json j = Json::object();
  for (const auto& [pow, c] : v.t)
    if (!is_zero(c)) j[std::to_string(pow)] = rat_str(c);
  return j;
}

LogVal parse_logval(const Json& j) {
  req(j.is_object(), "log value must be an object keyed by log powers");
  LogVal v;
  for (const auto& [key, val] : j.items()) {
    size_t pos = 0;
    int pow = 0;
    try {
      pow = std::stoi(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    req(pos == key.size() && !key.empty(), "bad log power \"" + key + "\"");
    Rat c = parse_rat(val);
    if (!is_zero(c)) v.t.emplace(pow, std::move(c));
  }
  return v;
}

namespace {

template <class R, class ToJson>
Json tensor_json_impl(const TensorElem<R>& e, ToJson&& coeff_json) {
  Json j;
  j["n"] = e.n;
  j["g"] = e.q / 2;
  j["terms"] = terms_json(e, coeff_json);
  return j;
}

template <class R, class Parse>
TensorElem<R> parse_tensor_impl(const Json& j, Parse&& parse_coeff) {
  int n = (int)parse_int(field(j, "n"), "\"n\"");
  int g = (int)parse_int(field(j, "g"), "\"g\"");
  req(n >= 0 && g >= 1, "need n >= 0 and g >= 1");
  TensorElem<R> e{n, 2 * g, {}};
  parse_terms_into(field(j, "terms"), e, parse_coeff);
  return e;
}

}  // namespace

Json tensor_json(const TensorElem<Rat>& e) {
  return tensor_json_impl(e, [](const Rat& v) { return Json(rat_str(v)); });
}

Json tensor_json(const TensorElem<FuncElem>& e) {
  return tensor_json_impl(e, [](const FuncElem& v) { return funcelem_json(v); });
}

TensorElem<Rat> parse_tensor_rat(const Json& j) {
  return parse_tensor_impl<Rat>(j, [](const Json& v) { return parse_rat(v); });
}

TensorElem<FuncElem> parse_tensor_func(const Json& j) {
  return parse_tensor_impl<FuncElem>(j, [](const Json& v) { return parse_funcelem(v); });
}

Json curve_json(const CurveModel& c) {
  Json j;
  j["f"] = poly_json(c.f);
  j["genus"] = c.g;
  if (c.basepoint) {
    Json b;
    b["x"] = rat_str(c.basepoint->first);
    b["y"] = rat_str(c.basepoint->second);
    j["basepoint"] = std::move(b);
  } else {
    j["basepoint"] = nullptr;
  }
  Json alphas = Json::array();
  for (const OneForm& w : c.alphas) alphas.push_back(oneform_json(w));
  j["alphas"] = std::move(alphas);
  j["F"] = funcelem_json(c.F);
  return j;
}

CurveModel parse_curve(const Json& j) {
  Poly f = parse_poly(field(j, "f"));
  int g = (int)parse_int(field(j, "genus"), "\"genus\"");
  std::optional<std::pair<Rat, Rat>> bp;
  const Json& bj = field(j, "basepoint");
  if (!bj.is_null()) bp.emplace(parse_rat(field(bj, "x")), parse_rat(field(bj, "y")));
  std::vector<OneForm> alphas;
  const Json& aj = field(j, "alphas");
  req(aj.is_array(), "\"alphas\" must be an array");
  for (const Json& a : aj) alphas.push_back(parse_oneform(a));
  FuncElem F = parse_funcelem(field(j, "F"));
  return curve_new(f, g, BasisChoice::custom, alphas, FChoice::custom, F, bp);
}

Json extend_json(const LogExtension& ext) {
  Json j;
  j["level"] = ext.level;
  j["curve"] = curve_json(ext.curve);
  Json h = Json::array(), c = Json::array();
  for (int s = 1; s <= ext.level; ++s) {
    for (Rank r = 1; r <= (Rank)ext.h0[s].size(); ++r) {
      if (!ext.h0[s][r - 1].zero()) {
        Json e;
        e["i"] = s;
        e["r"] = r;
        e["elem"] = funcelem_json(ext.h0[s][r - 1]);
        h.push_back(std::move(e));
      }
      if (!ext.c0[s][r - 1].zero()) {
        Json e;
        e["i"] = s;
        e["r"] = r;
        e["elem"] = oneform_json(ext.c0[s][r - 1]);
        c.push_back(std::move(e));
      }
    }
  }
  j["h"] = std::move(h);
  j["c"] = std::move(c);
  j["lambda_like_constants"] = constants_json(ext.curve);
  return j;
}

LogExtension parse_extend(const Json& j) {
  LogExtension ext;
  ext.curve = parse_curve(field(j, "curve"));
  ext.level = (int)parse_int(field(j, "level"), "\"level\"");
  req(ext.level >= 0, "\"level\" must be >= 0");
  const int q = 2 * ext.curve.g;
  ext.h0.assign(ext.level + 1, {});
  ext.c0.assign(ext.level + 1, {});
  for (int s = 1; s <= ext.level; ++s) {
    ext.h0[s].assign((size_t)q_pow(q, s), FuncElem{});
    ext.c0[s].assign((size_t)q_pow(q, s), OneForm{});
  }
  auto place = [&](const Json& arr, auto&& parse, auto& store, const char* what) {
    req(arr.is_array(), std::string("\"") + what + "\" must be an array");
    for (const Json& e : arr) {
      int s = (int)parse_int(field(e, "i"), "level index");
      Rank r = (Rank)parse_int(field(e, "r"), "rank");
      req(s >= 1 && s <= ext.level, "level index out of range");
      req(r >= 1 && r <= (Rank)store[s].size(), "rank out of range");
      store[s][r - 1] = parse(field(e, "elem"));
    }
  };
  place(field(j, "h"), [](const Json& e) { return parse_funcelem(e); }, ext.h0, "h");
  place(field(j, "c"), [](const Json& e) { return parse_oneform(e); }, ext.c0, "c");
  return ext;
}

Json hodge_json(const HodgeGenerators& gens) {
  Json j;
  j["level"] = gens.level;
  j["curve"] = curve_json(gens.curve);
  Json list = Json::array();
  auto coeff = [](const FuncElem& v) { return funcelem_json(v); };
  for (int m = 0; m <= gens.level; ++m)
    for (Rank f : f_index_set(m, gens.curve.g)) {
      Json e;
      e["m"] = m;
      e["f"] = f;
      e["terms"] = terms_json(gens.generator(m, f), coeff);
      e["terms_y"] = terms_json(gens.generator(m, f, true), coeff);
      list.push_back(std::move(e));
    }
  j["generators"] = std::move(list);
  j["constants"] = constants_json(gens.curve);
  return j;
}

HodgeGenerators parse_hodge(const Json& j) {
  HodgeGenerators gens;
  gens.curve = parse_curve(field(j, "curve"));
  gens.level = (int)parse_int(field(j, "level"), "\"level\"");
  req(gens.level >= 0, "\"level\" must be >= 0");
  const int q = 2 * gens.curve.g;
  const int n = gens.level;
  gens.a.resize(n + 1);
  gens.b.resize(n + 1);
  for (int m = 0; m <= n; ++m)
    for (Rank f : f_index_set(m, gens.curve.g)) {
      auto& ta = gens.a[m][f];
      auto& tb = gens.b[m][f];
      for (int l = m + 1; l <= n; ++l) {
        ta.emplace_back((size_t)q_pow(q, l), FuncElem{});
        tb.emplace_back((size_t)q_pow(q, l), FuncElem{});
      }
    }
  const Json& list = field(j, "generators");
  req(list.is_array(), "\"generators\" must be an array");
  auto fill = [&](const Json& terms, int m, Rank f, auto& table) {
    req(terms.is_array(), "generator terms must be an array");
    for (const Json& t : terms) {
      int len = (int)parse_int(field(t, "len"), "term length");
      Rank rank = (Rank)parse_int(field(t, "rank"), "term rank");
      FuncElem v = parse_funcelem(field(t, "coeff"));
      if (len == m) {
        req(rank == f && v == FuncElem::constant(1), "head term must be the bare word");
        continue;
      }
      req(len > m && len <= gens.level, "correction length out of range");
      req(rank >= 1 && rank <= q_pow(q, len), "term rank out of range");
      table[m].at(f)[len - (m + 1)][rank - 1] = std::move(v);
    }
  };
  for (const Json& e : list) {
    int m = (int)parse_int(field(e, "m"), "\"m\"");
    Rank f = (Rank)parse_int(field(e, "f"), "\"f\"");
    req(m >= 0 && m <= n, "\"m\" out of range");
    req(in_f_index_set(f, m, gens.curve.g), "\"f\" is not a generator index");
    fill(field(e, "terms"), m, f, gens.a);
    fill(field(e, "terms_y"), m, f, gens.b);
  }
  return gens;
}

Json periodmap_json(const PeriodMapResult& r) {
  Json j;
  j["level"] = r.level;
  j["basepoint"] = r.kind == BasepointKind::rational ? "rational" : "tangential";
  j["curve"] = curve_json(r.curve);
  j["forms"] = Json::array();
  for (const auto& [label, w] : r.registry.forms) {
    Json e;
    e["label"] = label;
    e["elem"] = oneform_json(w);
    j["forms"].push_back(std::move(e));
  }
  j["u"] = lie_json(r.u, r.registry);
  j["hodge_factor"] = lie_json(r.hodge_factor, r.registry);
  j["constants"] = constants_json(r.curve);
  return j;
}

PeriodMapResult parse_periodmap(const Json& j) {
  PeriodMapResult r;
  r.level = (int)parse_int(field(j, "level"), "\"level\"");
  const Json& bj = field(j, "basepoint");
  req(bj.is_string(), "\"basepoint\" must be \"rational\" or \"tangential\"");
  const std::string kind = bj.get<std::string>();
  req(kind == "rational" || kind == "tangential", "unknown basepoint kind \"" + kind + "\"");
  r.kind = kind == "rational" ? BasepointKind::rational : BasepointKind::tangential;
  r.curve = parse_curve(field(j, "curve"));
  const int q = 2 * r.curve.g;
  const Json& forms = field(j, "forms");
  req(forms.is_array(), "\"forms\" must be an array");
  for (const Json& e : forms) {
    const Json& lab = field(e, "label");
    req(lab.is_string(), "form labels must be strings");
    r.registry.add(lab.get<std::string>(), parse_oneform(field(e, "elem")));
  }
  r.u = parse_lie(field(j, "u"), r.level, q, r.registry);
  r.hodge_factor = parse_lie(field(j, "hodge_factor"), r.level, q, r.registry);
  r.u_tensor = lie_expand(r.u);
  r.h_tensor = lie_expand(r.hodge_factor);
  r.pcr = concat_mul(exp_trunc(r.h_tensor), exp_trunc(r.u_tensor));
  return r;
}

std::vector<std::pair<std::string, LaurentSeries>> parse_eval_forms(const Json& j) {
  req(j.is_array(), "forms input must be an array");
  std::vector<std::pair<std::string, LaurentSeries>> out;
  int i = 0;
  for (const Json& e : j) {
    std::string label = "w" + std::to_string(i++);
    if (e.is_object() && e.contains("label")) {
      const Json& lab = e.at("label");
      req(lab.is_string(), "form labels must be strings");
      label = lab.get<std::string>();
    }
    out.emplace_back(std::move(label), parse_lser(e));
  }
  return out;
}

MapOracle parse_oracle(const Json& j) {
  req(j.is_object(), "oracle input must be an object keyed by form words");
  MapOracle o;
  for (const auto& [key, val] : j.items()) o.table.emplace(key, parse_rat(val));
  return o;
}

}  // namespace uam
