#include "laxdesc/monadics.hpp"

#include <functional>
#include <set>

#include "laxdesc/kan.hpp"

namespace laxdesc {

Monad monad_from_adjunction(const LazyAdjunction& adj) {
  Monad m;
  m.base = adj.left.src;
  m.t = compose_fun(adj.right, adj.left);
  m.eta = adj.unit;
  m.mu = whisker_left(adj.right, whisker_right(adj.counit, adj.left));
  m.mu.src = compose_fun(m.t, m.t);
  m.mu.tgt = m.t;
  return m;
}

LawReport check_monad(const Monad& m, const std::vector<Obj>& objs) {
  LawReport r;
  const auto& c = *m.base;
  for (const Obj& x : objs) {
    Obj tx = m.t.obj(x);
    Mor idt = c.id(tx);
    if (c.compose(m.mu.at(x), m.eta.at(tx)) != idt) r.add("left unit law fails at " + c.show(x));
    if (c.compose(m.mu.at(x), m.t.mor(m.eta.at(x))) != idt) r.add("right unit law fails at " + c.show(x));
    if (c.compose(m.mu.at(x), m.mu.at(tx)) != c.compose(m.mu.at(x), m.t.mor(m.mu.at(x))))
      r.add("associativity fails at " + c.show(x));
  }
  r.merge(check_natural(m.eta, objs));
  r.merge(check_natural(m.mu, objs));
  return r;
}

Monad product_monad(const Monoid& mon, int bound) {
  const int n = mon.size;
  auto base = finset::slice_category(1, bound);
  auto tobj = [n](const Obj& w) { return Obj(w.size() * n, 0); };
  auto tmor = [n, tobj](const Mor& f) {
    Mor r{tobj(f.dom), tobj(f.cod), {}};
    for (int i : f.data)
      for (int x = 0; x < n; ++x) r.data.push_back(i * n + x);
    return r;
  };
  Monad m;
  m.base = base;
  m.t = Fun{base, base, tobj, tmor};
  m.eta = Nat{identity_fun(base), m.t, [n, tobj, u = mon.unit](const Obj& w) {
                Mor r{w, tobj(w), {}};
                for (size_t i = 0; i < w.size(); ++i) r.data.push_back(static_cast<int>(i) * n + u);
                return r;
              }};
  m.mu = Nat{compose_fun(m.t, m.t), m.t, [n, tobj, mon](const Obj& w) {
               Obj tw = tobj(w);
               Mor r{tobj(tw), tw, {}};
               for (size_t i = 0; i < w.size(); ++i)
                 for (int x = 0; x < n; ++x)
                   for (int y = 0; y < n; ++y) r.data.push_back(static_cast<int>(i) * n + mon.mul(x, y));
               return r;
             }};
  return m;
}

bool is_algebra(const Monad& m, const Obj& w, const Mor& rho) {
  const auto& c = *m.base;
  if (rho.dom != m.t.obj(w) || rho.cod != w) return false;
  if (c.compose(rho, m.eta.at(w)) != c.id(w)) return false;
  return c.compose(rho, m.t.mor(rho)) == c.compose(rho, m.mu.at(w));
}

std::vector<Mor> algebra_structures(const Monad& m, const Obj& w) {
  std::vector<Mor> out;
  for (const Mor& rho : m.base->hom(m.t.obj(w), w))
    if (is_algebra(m, w, rho)) out.push_back(rho);
  return out;
}

EMCategory em_category(const Monad& m, const std::vector<Obj>& carriers) {
  EMCategory em;
  for (const Obj& w : carriers)
    for (const Mor& rho : algebra_structures(m, w)) em.objects.push_back(encode_structured({w, rho}));
  auto base = m.base;
  Fun t = m.t;
  auto pred = [base, t](const Structured& x, const Structured& y, const Mor& f) {
    return base->compose(f, x.structure) == base->compose(y.structure, t.mor(f));
  };
  em.cat = std::make_shared<StructCat>(m.base, m.base, em.objects, pred);
  auto sc = em.cat;
  em.forget = Fun{sc, base, [](const Obj& x) { return decode_structured(x).carrier; },
                  [sc](const Mor& f) { return sc->underlying(f); }};
  Nat mu = m.mu;
  auto fobj = [t, mu](const Obj& w) { return encode_structured({t.obj(w), mu.at(w)}); };
  em.free = Fun{base, sc, fobj, [t, fobj](const Mor& f) { return Mor{fobj(f.dom), fobj(f.cod), t.mor(f).data}; }};
  return em;
}

Fun comparison_functor(const LazyAdjunction& adj, const EMCategory& em) {
  Fun r = adj.right;
  Nat counit = adj.counit;
  auto obj = [r, counit](const Obj& y) { return encode_structured({r.obj(y), r.mor(counit.at(y))}); };
  return Fun{adj.right.src, em.cat, obj, [r, obj](const Mor& f) { return Mor{obj(f.dom), obj(f.cod), r.mor(f).data}; }};
}

MonadicityReport is_monadic(const Fun& g, const LazyAdjunction& adj, const std::vector<Obj>& src_objs,
                            const std::vector<Obj>& tgt_objs) {
  MonadicityReport r;
  r.has_left_adjoint = true;
  Monad m = monad_from_adjunction(adj);
  EMCategory em = em_category(m, tgt_objs);
  Fun k = comparison_functor(adj, em);
  EquivalenceReport eq = check_equivalence(k, src_objs, em.objects);
  r.comparison_equivalence = eq.equivalence();
  if (!r.comparison_equivalence) r.witness = "comparison: " + eq.witness;
  std::string cw;
  r.conservative = is_conservative(g, src_objs, &cw);
  if (!r.conservative && r.witness.empty()) r.witness = "not conservative at " + cw;
  r.split_pairs_ok = true;
  const auto& a = *g.src;
  const auto& b = *g.tgt;
  for (const Obj& x : src_objs)
    for (const Obj& y : src_objs) {
      auto hs = a.hom(x, y);
      for (const Mor& f : hs)
        for (const Mor& h : hs) {
          Mor gf = g.mor(f), gh = g.mor(h);
          if (!find_split_coequalizer(b, tgt_objs, gf, gh)) continue;
          ++r.split_pairs;
          auto q = find_coequalizer(a, src_objs, f, h);
          if (!q || !is_coequalizer(b, tgt_objs, gf, gh, g.mor(*q))) {
            if (r.split_pairs_ok && r.witness.empty())
              r.witness = "split pair " + a.show(f) + ", " + a.show(h) + (q ? " coequalizer not preserved" : " has no coequalizer");
            r.split_pairs_ok = false;
          }
        }
    }
  r.creates_split = r.conservative && r.split_pairs_ok;
  return r;
}

MonadicityReport is_monadic(const FinFunctor& g) {
  auto adj = find_left_adjoint(g);
  if (!adj) {
    MonadicityReport r;
    r.witness = "no left adjoint";
    return r;
  }
  return is_monadic(lazy(g), lazy(*adj), g.src->objects(), g.tgt->objects());
}

Nat beck_chevalley_mate(const IndexedCategory& f, const Mor& u, const Mor& v) {
  BasePullback pb = f.pullback(u, v);
  auto l1 = f.left_adjoint(pb.p1);
  auto lv = f.left_adjoint(v);
  if (!l1 || !lv) throw CatError("missing left adjoint for the square");
  Fun fp2 = f.on_mor(pb.p2);
  Fun fu = f.on_mor(u);
  Nat cv = f.coh(pb.p2, v);
  Nat cu = f.coh(pb.p1, u);
  CatPtr cat_p = f.at(pb.apex);
  CatPtr cat_a = f.at(u.dom);
  LazyAdjunction a1 = *l1, av = *lv;
  auto at = [=](const Obj& x) {
    Obj y = av.left.obj(x);
    Mor lifted = fp2.mor(av.unit.at(x));
    auto back = cat_p->inverse(cu.at(y));
    if (!back) throw CatError("coherence cell is not invertible");
    Mor mid = cat_p->compose(*back, cv.at(y));
    Mor inner = a1.left.mor(cat_p->compose(mid, lifted));
    return cat_a->compose(a1.counit.at(fu.obj(y)), inner);
  };
  return Nat{compose_fun(a1.left, fp2), compose_fun(fu, av.left), at};
}

BCReport beck_chevalley(const IndexedCategory& f, const Mor& u, const Mor& v, const std::vector<Obj>& objs) {
  BCReport r;
  Nat mate;
  try {
    mate = beck_chevalley_mate(f, u, v);
  } catch (const CatError& e) {
    r.holds = false;
    r.adjoints_available = false;
    r.detail = e.what();
    return r;
  }
  const auto& cat_a = *mate.tgt.tgt;
  for (const Obj& x : objs) {
    ++r.checked;
    Mor c = mate.at(x);
    if (!cat_a.is_iso(c)) {
      r.holds = false;
      r.witness = x;
      r.detail = "component " + cat_a.show(c) + " is not invertible";
      return r;
    }
  }
  return r;
}

BCReport beck_chevalley(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& objs) {
  return beck_chevalley(f, p, p, objs);
}

std::optional<std::map<Obj, Obj>> find_carrier_isomorphism(const StructCat& a, const std::vector<Obj>& a_objs,
                                                           const StructCat& b, const std::vector<Obj>& b_objs) {
  if (a_objs.size() != b_objs.size()) return std::nullopt;
  const size_t n = a_objs.size();
  auto data_set = [](const std::vector<Mor>& hs) {
    std::set<std::vector<int>> s;
    for (const Mor& m : hs) s.insert(m.data);
    return s;
  };
  std::vector<Obj> a_carrier, b_carrier;
  for (const Obj& x : a_objs) a_carrier.push_back(decode_structured(x).carrier);
  for (const Obj& x : b_objs) b_carrier.push_back(decode_structured(x).carrier);
  std::vector<int> pick(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == n) return true;
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || b_carrier[j] != a_carrier[i]) continue;
      pick[i] = static_cast<int>(j);
      bool ok = true;
      for (size_t k = 0; k <= i && ok; ++k) {
        const Obj& bk = b_objs[pick[k]];
        if (data_set(a.hom(a_objs[i], a_objs[k])) != data_set(b.hom(b_objs[j], bk))) ok = false;
        if (ok && data_set(a.hom(a_objs[k], a_objs[i])) != data_set(b.hom(bk, b_objs[j]))) ok = false;
      }
      if (ok) {
        used[j] = true;
        if (go(i + 1)) return true;
        used[j] = false;
      }
    }
    pick[i] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::map<Obj, Obj> r;
  for (size_t i = 0; i < n; ++i) r[a_objs[i]] = b_objs[pick[i]];
  return r;
}

BRReport benabou_roubaud_compare(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers,
                                 const std::vector<Obj>& base_objs) {
  BRReport r;
  r.bc = beck_chevalley(f, p, carriers);
  auto adj = f.left_adjoint(p);
  if (!adj) {
    r.witness = "no left adjoint of F(p)";
    return r;
  }
  DescentFactorization df = descent_factorization(f, p, carriers, base_objs);
  r.descent_objects = df.descent.objects.size();
  Monad m = monad_from_adjunction(*adj);
  EMCategory em = em_category(m, carriers);
  r.algebras = em.objects.size();
  if (!df.kp) {
    r.witness = "descent factorization failed: " + df.witness;
    return r;
  }
  auto iso = find_carrier_isomorphism(*df.descent.cat, df.descent.objects, *em.cat, em.objects);
  if (!iso) {
    r.witness = "no carrier-preserving isomorphism between descent data and algebras";
    return r;
  }
  r.found = true;
  auto table = std::make_shared<std::map<Obj, Obj>>(*iso);
  auto eobj = [table](const Obj& x) {
    auto it = table->find(x);
    if (it == table->end()) throw CatError("object outside the compared range");
    return it->second;
  };
  Fun e{df.descent.cat, em.cat, eobj, [eobj](const Mor& m) { return Mor{eobj(m.dom), eobj(m.cod), m.data}; }};
  r.forget_commutes = true;
  for (const Obj& x : df.descent.objects)
    if (em.forget.obj(e.obj(x)) != df.descent.forget.obj(x)) r.forget_commutes = false;
  Fun kt = comparison_functor(*adj, em);
  try {
    r.comparison_commutes = find_natural_iso(compose_fun(e, *df.kp), kt, base_objs).has_value();
    if (!r.comparison_commutes) r.witness = "E K_p and K^T are not isomorphic";
  } catch (const CatError& ex) {
    r.witness = ex.what();
  }
  return r;
}

}  // namespace laxdesc
