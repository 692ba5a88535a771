#include "laxdesc/laxdescent.hpp"

#include <map>

namespace laxdesc {

Obj encode_structured(const Structured& s) {
  Obj x;
  x.push_back(static_cast<int>(s.carrier.size()));
  x.insert(x.end(), s.carrier.begin(), s.carrier.end());
  x.push_back(static_cast<int>(s.structure.dom.size()));
  x.insert(x.end(), s.structure.dom.begin(), s.structure.dom.end());
  x.push_back(static_cast<int>(s.structure.cod.size()));
  x.insert(x.end(), s.structure.cod.begin(), s.structure.cod.end());
  x.insert(x.end(), s.structure.data.begin(), s.structure.data.end());
  return x;
}

Structured decode_structured(const Obj& x) {
  Structured s;
  size_t pos = 0;
  auto take = [&](Obj& out) {
    if (pos >= x.size()) throw CatError("malformed structured object");
    size_t n = static_cast<size_t>(x[pos++]);
    if (pos + n > x.size()) throw CatError("malformed structured object");
    out.assign(x.begin() + pos, x.begin() + pos + n);
    pos += n;
  };
  take(s.carrier);
  take(s.structure.dom);
  take(s.structure.cod);
  s.structure.data.assign(x.begin() + pos, x.end());
  return s;
}

bool StructCat::accepts(const Obj& a, const Obj& b, const Mor& underlying) const {
  return pred_(decode_structured(a), decode_structured(b), underlying);
}

Mor StructCat::underlying(const Mor& m) const {
  return Mor{decode_structured(m.dom).carrier, decode_structured(m.cod).carrier, m.data};
}

std::vector<Mor> StructCat::hom(const Obj& a, const Obj& b) const {
  Structured sa = decode_structured(a), sb = decode_structured(b);
  std::vector<Mor> out;
  for (const Mor& m : base_->hom(sa.carrier, sb.carrier))
    if (pred_(sa, sb, m)) out.push_back(Mor{a, b, m.data});
  return out;
}

Mor StructCat::id(const Obj& a) const { return Mor{a, a, base_->id(decode_structured(a).carrier).data}; }

Mor StructCat::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CatError("composing non-composable structured morphisms");
  return Mor{f.dom, g.cod, base_->compose(underlying(g), underlying(f)).data};
}

std::optional<Mor> StructCat::inverse(const Mor& f) const {
  auto inv = base_->inverse(underlying(f));
  if (!inv) return std::nullopt;
  // The inverse of a structure-preserving isomorphism preserves structure.
  return Mor{f.cod, f.dom, inv->data};
}

std::string StructCat::show(const Obj& a) const {
  Structured s = decode_structured(a);
  return "(" + base_->show(s.carrier) + ", " + structure_cat_->show(s.structure) + ")";
}

std::optional<std::string> descent_datum_failure(const TruncCosimp& a, const DerivedCells& c, const Obj& w,
                                                 const Mor& phi) {
  try {
    const Fun& d0 = a.at("d0");
    const Fun& d1 = a.at("d1");
    if (phi.dom != d1.obj(w) || phi.cod != d0.obj(w)) return "mistyped";
    const auto& c3 = a.cats[2];
    Mor lhs = c3->compose(a.at("D0").mor(phi), c3->compose(c.s02.at(w), a.at("D2").mor(phi)));
    Mor rhs = c3->compose(c.s01.at(w), c3->compose(a.at("D1").mor(phi), c.s12.at(w)));
    if (lhs != rhs) return "associativity";
    Mor ident = a.cats[0]->compose(c.n0.at(w), a.at("s0").mor(phi));
    if (ident != c.n1.at(w)) return "identity";
  } catch (const CatError& e) {
    return std::string("evaluation failed: ") + e.what();
  }
  return std::nullopt;
}

bool is_descent_datum(const TruncCosimp& a, const DerivedCells& c, const Obj& w, const Mor& phi) {
  return !descent_datum_failure(a, c, w, phi).has_value();
}

bool is_descent_datum(const TruncCosimp& a, const Obj& w, const Mor& phi) {
  return is_descent_datum(a, derived_cells(a), w, phi);
}

bool is_descent_morphism(const TruncCosimp& a, const Structured& x, const Structured& y, const Mor& m) {
  const auto& c2 = a.cats[1];
  return c2->compose(a.at("d0").mor(m), x.structure) == c2->compose(y.structure, a.at("d1").mor(m));
}

std::vector<Mor> descent_data(const TruncCosimp& a, const DerivedCells& c, const Obj& w) {
  std::vector<Mor> out;
  for (const Mor& phi : a.cats[1]->hom(a.at("d1").obj(w), a.at("d0").obj(w)))
    if (is_descent_datum(a, c, w, phi)) out.push_back(phi);
  return out;
}

LaxDescent build_lax_descent(const TruncCosimp& a, const std::vector<Obj>& carriers) {
  DerivedCells cells = derived_cells(a);
  std::vector<Obj> objs;
  for (const Obj& w : carriers)
    for (const Mor& phi : descent_data(a, cells, w)) objs.push_back(encode_structured({w, phi}));
  Fun d0 = a.at("d0"), d1 = a.at("d1");
  auto pred = [d0, d1, c2 = a.cats[1]](const Structured& x, const Structured& y, const Mor& m) {
    return c2->compose(d0.mor(m), x.structure) == c2->compose(y.structure, d1.mor(m));
  };
  LaxDescent ld;
  ld.cat = std::make_shared<StructCat>(a.cats[0], a.cats[1], objs, pred);
  ld.objects = objs;
  auto sc = ld.cat;
  ld.forget = Fun{sc, a.cats[0], [](const Obj& x) { return decode_structured(x).carrier; },
                  [sc](const Mor& m) { return sc->underlying(m); }};
  ld.psi = Nat{compose_fun(d1, ld.forget), compose_fun(d0, ld.forget),
               [](const Obj& x) { return decode_structured(x).structure; }};
  return ld;
}

LawReport check_universal_pair(const TruncCosimp& a, const Fun& d, const Nat& psi, const std::vector<Obj>& objs) {
  LawReport r;
  DerivedCells cells = derived_cells(a);
  for (const Obj& x : objs) {
    Obj w = d.obj(x);
    if (auto fail = descent_datum_failure(a, cells, w, psi.at(x)))
      r.add("descent " + *fail + " fails at " + d.src->show(x));
  }
  r.merge(check_natural(psi, objs));
  return r;
}

FactorResult factor_functor(const TruncCosimp& a, const LaxDescent& ld, const Fun& f, const Nat& beta,
                            const std::vector<Obj>& objs) {
  FactorResult r;
  DerivedCells cells = derived_cells(a);
  for (const Obj& s : objs)
    if (auto fail = descent_datum_failure(a, cells, f.obj(s), beta.at(s))) {
      r.witness = s;
      r.reason = "descent " + *fail + " fails";
      return r;
    }
  if (!check_natural(beta, objs).ok()) {
    r.reason = "the 2-cell is not natural";
    return r;
  }
  auto obj = [f, beta](const Obj& s) { return encode_structured({f.obj(s), beta.at(s)}); };
  r.value = Fun{f.src, ld.cat, obj, [f, obj](const Mor& m) { return Mor{obj(m.dom), obj(m.cod), f.mor(m).data}; }};
  return r;
}

Factor2Result factor_2cell(const TruncCosimp& a, const LaxDescent& ld, const Fun& f1, const Fun& f0, const Nat& xi,
                           const std::vector<Obj>& objs) {
  Factor2Result r;
  for (const Obj& s : objs) {
    Obj x = f1.obj(s), y = f0.obj(s);
    if (!is_descent_morphism(a, decode_structured(x), decode_structured(y), xi.at(s))) {
      r.witness = s;
      return r;
    }
  }
  r.value = Nat{f1, f0, [f1, f0, xi](const Obj& s) { return Mor{f1.obj(s), f0.obj(s), xi.at(s).data}; }};
  return r;
}

}  // namespace laxdesc
