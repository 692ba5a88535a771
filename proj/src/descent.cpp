#include "laxdesc/descent.hpp"

#include <algorithm>

#include "laxdesc/kan.hpp"

namespace laxdesc {

using delta3::Gen;

Precategory eq_groupoid(const IndexedCategory& f, const Mor& p) {
  const auto& base = *f.base;
  BasePullback pb = f.pullback(p, p);
  Mor ide = base.id(p.dom);
  Mor diag = f.mediate(pb, ide, ide);
  BasePullback pb3 = f.pullback(pb.p2, pb.p1);
  Mor outer = f.mediate(pb, base.compose(pb.p1, pb3.p1), base.compose(pb.p2, pb3.p2));
  Precategory a;
  a.name = "Eq";
  a.base = f.base;
  a.objs = {p.dom, pb.apex, pb3.apex};
  a.gens[Gen::d1] = pb.p1;
  a.gens[Gen::d0] = pb.p2;
  a.gens[Gen::s0] = diag;
  a.gens[Gen::D2] = pb3.p1;
  a.gens[Gen::D0] = pb3.p2;
  a.gens[Gen::D1] = outer;
  return a;
}

Precategory eq_groupoid(const finset::FinSetMap& p) {
  int bound = std::max(1, p.dom * p.dom * p.dom);
  return eq_groupoid(finset::basic_indexed_category(bound), finset::as_mor(p));
}

Precategory underlying_discrete(const Precategory& a) {
  Precategory d = discrete_precategory(a.base, a.objs[0]);
  d.name = "discrete " + a.name;
  return d;
}

InternalActions internal_actions(const IndexedCategory& f, const Precategory& a, const std::vector<Obj>& carriers) {
  InternalActions r;
  r.cosimp = compose_indexed_with_precategory(f, a);
  r.descent = build_lax_descent(r.cosimp, carriers);
  return r;
}

DescentFactorization descent_factorization(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                           const std::vector<Obj>& base_objs) {
  DescentFactorization df;
  df.eq = eq_groupoid(f, p);
  df.fp = compose_indexed_with_precategory(f, df.eq);
  df.descent = build_lax_descent(df.fp, carriers);
  df.fp_functor = f.on_mor(p);
  const Mor& first = df.eq.gens.at(Gen::d1);
  const Mor& second = df.eq.gens.at(Gen::d0);
  df.datum = vcomp(invert(f.coh(second, p)), f.coh(first, p));
  df.datum.src = compose_fun(df.fp.at("d1"), df.fp_functor);
  df.datum.tgt = compose_fun(df.fp.at("d0"), df.fp_functor);
  FactorResult fr = factor_functor(df.fp, df.descent, df.fp_functor, df.datum, base_objs);
  if (!fr.value) {
    df.witness = fr.reason + (fr.witness ? " at " + df.fp_functor.src->show(*fr.witness) : "");
    return df;
  }
  df.datum_ok = true;
  df.kp = fr.value;
  const Fun& k = *df.kp;
  df.composite_check = true;
  const auto& src = *df.fp_functor.src;
  for (const Obj& y : base_objs) {
    if (df.descent.forget.obj(k.obj(y)) != df.fp_functor.obj(y)) {
      df.composite_check = false;
      df.witness = "forget . K_p differs from F(p) at " + src.show(y);
      break;
    }
    for (const Obj& z : base_objs)
      for (const Mor& m : src.hom(y, z))
        if (df.descent.forget.mor(k.mor(m)) != df.fp_functor.mor(m)) {
          df.composite_check = false;
          df.witness = "forget . K_p differs from F(p) on " + src.show(m);
        }
  }
  return df;
}

EffectivenessReport is_effective_descent(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                         const std::vector<Obj>& base_objs) {
  EffectivenessReport r;
  DescentFactorization df = descent_factorization(f, p, carriers, base_objs);
  r.datum_ok = df.datum_ok;
  r.composite_ok = df.composite_check;
  r.descent_objects = df.descent.objects.size();
  if (!df.kp) {
    r.equivalence.witness = df.witness;
    return r;
  }
  r.equivalence = check_equivalence(*df.kp, base_objs, df.descent.objects);
  return r;
}

EffectivenessReport is_effective_descent_slices(const finset::FinSetMap& p, int bound) {
  IndexedCategory f = finset::basic_indexed_category(bound);
  finset::SliceCat over_e(p.dom, bound), over_b(p.cod, bound);
  Fun pull = finset::change_of_base(p, bound);
  std::vector<Obj> base_objs;
  for (const Obj& v : over_b.objects())
    if (static_cast<int>(pull.obj(v).size()) <= bound) base_objs.push_back(v);
  return is_effective_descent(f, finset::as_mor(p), over_e.objects(), base_objs);
}

LawReport validate_table_indexed(const TableIndexed& t) {
  LawReport r;
  const auto& c = *t.base;
  r.merge(validate_category(c));
  if (!r.ok()) return r;
  if (static_cast<int>(t.fibers.size()) != c.object_count() || static_cast<int>(t.reindex.size()) != c.morphism_count()) {
    r.add("fiber or reindexing table has the wrong size");
    return r;
  }
  for (int u = 0; u < c.morphism_count(); ++u) {
    const auto& f = t.reindex[u];
    if (f.src != t.fibers[c.cod(u)] || f.tgt != t.fibers[c.dom(u)]) {
      r.add("reindexing along " + c.mor_name(u) + " has the wrong type");
      continue;
    }
    for (auto& v : check_functor(f).violations) r.add("reindexing along " + c.mor_name(u) + ": " + v);
  }
  if (!r.ok()) return r;
  for (int x = 0; x < c.object_count(); ++x)
    if (!(t.reindex[c.identity(x)] == identity_functor(t.fibers[x])))
      r.add("reindexing along the identity of " + c.obj_name(x) + " is not the identity");
  for (int u = 0; u < c.morphism_count(); ++u)
    for (int v : c.out(c.cod(u)))
      if (!(t.reindex[c.comp(v, u)] == compose(t.reindex[u], t.reindex[v])))
        r.add("reindexing is not strictly functorial at " + c.mor_name(v) + " . " + c.mor_name(u));
  return r;
}

namespace {

Nat identity_cell(const Fun& src, const Fun& tgt) {
  auto c = tgt.tgt;
  auto to = tgt.obj;
  return Nat{src, tgt, [c, to](const Obj& x) { return c->id(to(x)); }};
}

FinCatPtr cospan_shape() {
  static const FinCatPtr shape = [] {
    auto s = std::make_shared<FinCategory>(3, std::vector<int>{0, 1, 2, 0, 1}, std::vector<int>{0, 1, 2, 2, 2},
                                           std::vector<int>{0, 1, 2});
    s->fill_identity_laws();
    s->finalize();
    return FinCatPtr(s);
  }();
  return shape;
}

}  // namespace

IndexedCategory table_indexed_category(const TableIndexed& t) {
  IndexedCategory f;
  f.name = "table";
  f.base = t.base;
  auto fibers = t.fibers;
  auto reindex = t.reindex;
  auto base = t.base;
  f.at = [fibers](const Obj& x) -> CatPtr { return fibers.at(x.at(0)); };
  auto on_mor = [reindex](const Mor& u) { return lazy(reindex.at(u.data.at(0))); };
  f.on_mor = on_mor;
  f.coh = [on_mor, base](const Mor& u, const Mor& v) {
    return identity_cell(compose_fun(on_mor(u), on_mor(v)), on_mor(base->compose(v, u)));
  };
  f.unit = [on_mor, base, fibers](const Obj& x) {
    return identity_cell(identity_fun(fibers.at(x.at(0))), on_mor(base->id(x)));
  };
  f.left_adjoint = [reindex](const Mor& u) -> std::optional<LazyAdjunction> {
    auto adj = find_left_adjoint(reindex.at(u.data.at(0)));
    if (!adj) return std::nullopt;
    return lazy(*adj);
  };
  f.pullback = [base](const Mor& a, const Mor& b) {
    FinFunctor d{cospan_shape(), base, {a.dom[0], b.dom[0], a.cod[0]}, {}};
    d.mor = {base->identity(a.dom[0]), base->identity(b.dom[0]), base->identity(a.cod[0]), a.data[0], b.data[0]};
    auto lim = find_limit(d);
    if (!lim) throw CatError("the base has no pullback of " + base->mor_name(a.data[0]) + " and " + base->mor_name(b.data[0]));
    return BasePullback{{lim->apex}, base->as_mor(lim->legs[0]), base->as_mor(lim->legs[1])};
  };
  f.mediate = [base](const BasePullback& pb, const Mor& a, const Mor& b) {
    for (int m : base->hom_ids(a.dom[0], pb.apex[0]))
      if (base->comp(pb.p1.data[0], m) == a.data[0] && base->comp(pb.p2.data[0], m) == b.data[0]) return base->as_mor(m);
    throw CatError("no mediating morphism into the pullback");
  };
  return f;
}

EffectivenessReport is_effective_descent(const TableIndexed& t, int p) {
  IndexedCategory f = table_indexed_category(t);
  const auto& c = *t.base;
  return is_effective_descent(f, c.as_mor(p), t.fibers[c.dom(p)]->objects(), t.fibers[c.cod(p)]->objects());
}

}  // namespace laxdesc
