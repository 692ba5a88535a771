#include "laxdesc/finset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace laxdesc::finset {

FinSetMap make_map(int dom, int cod, std::vector<int> img) {
  if (dom < 0 || cod < 0 || static_cast<int>(img.size()) != dom) throw CatError("map arity mismatch");
  for (int v : img)
    if (v < 0 || v >= cod) throw CatError("map image out of range");
  return FinSetMap{dom, cod, std::move(img)};
}

FinSetMap identity_map(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return FinSetMap{n, n, v};
}

FinSetMap compose(const FinSetMap& g, const FinSetMap& f) {
  if (f.cod != g.dom) throw CatError("composing non-composable maps");
  FinSetMap h{f.dom, g.cod, {}};
  for (int x : f.img) h.img.push_back(g.img[x]);
  return h;
}

bool is_surjective(const FinSetMap& f) {
  std::vector<bool> hit(f.cod, false);
  for (int v : f.img) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const FinSetMap& f) {
  std::vector<bool> hit(f.cod, false);
  for (int v : f.img) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<FinSetMap> all_maps(int dom, int cod) {
  std::vector<FinSetMap> r;
  if (dom > 0 && cod == 0) return r;
  std::vector<int> img(dom, 0);
  while (true) {
    r.push_back(FinSetMap{dom, cod, img});
    int i = dom - 1;
    while (i >= 0 && img[i] == cod - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return r;
}

ChosenLimit pullback(const FinSetMap& f, const FinSetMap& g) {
  if (f.cod != g.cod) throw CatError("pullback of maps with different codomains");
  ChosenLimit l;
  FinSetMap p1{0, f.dom, {}}, p2{0, g.dom, {}};
  for (int x = 0; x < f.dom; ++x)
    for (int y = 0; y < g.dom; ++y)
      if (f.img[x] == g.img[y]) {
        l.tuples.push_back({x, y});
        p1.img.push_back(x);
        p2.img.push_back(y);
      }
  l.apex = static_cast<int>(l.tuples.size());
  p1.dom = p2.dom = l.apex;
  l.projections = {p1, p2};
  return l;
}

LawReport check_diagram(const SetDiagram& d) {
  LawReport r;
  const auto& s = *d.shape;
  if (static_cast<int>(d.sizes.size()) != s.object_count() || static_cast<int>(d.maps.size()) != s.morphism_count()) {
    r.add("diagram tables have the wrong size");
    return r;
  }
  for (int u = 0; u < s.morphism_count(); ++u) {
    const auto& m = d.maps[u];
    if (static_cast<int>(m.size()) != d.sizes[s.dom(u)]) r.add("map of " + s.mor_name(u) + " has wrong arity");
    for (int v : m)
      if (v < 0 || v >= d.sizes[s.cod(u)]) r.add("map of " + s.mor_name(u) + " leaves its codomain");
  }
  if (!r.ok()) return r;
  for (int x = 0; x < s.object_count(); ++x)
    for (int i = 0; i < d.sizes[x]; ++i)
      if (d.maps[s.identity(x)][i] != i) r.add("identity of " + s.obj_name(x) + " not sent to an identity");
  for (int u = 0; u < s.morphism_count(); ++u)
    for (int v : s.out(s.cod(u)))
      for (int i = 0; i < d.sizes[s.dom(u)]; ++i)
        if (d.maps[s.comp(v, u)][i] != d.maps[v][d.maps[u][i]]) {
          r.add("composition not preserved at " + s.mor_name(v) + " . " + s.mor_name(u));
          break;
        }
  return r;
}

ChosenLimit limit(const SetDiagram& d) {
  const auto& s = *d.shape;
  const int n = s.object_count();
  std::vector<std::vector<int>> check_at(n);
  for (int u = 0; u < s.morphism_count(); ++u) check_at[std::max(s.dom(u), s.cod(u))].push_back(u);
  ChosenLimit l;
  std::vector<int> t(n, 0);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      l.tuples.push_back(t);
      return;
    }
    for (int e = 0; e < d.sizes[x]; ++e) {
      t[x] = e;
      bool ok = true;
      for (int u : check_at[x])
        if (d.maps[u][t[s.dom(u)]] != t[s.cod(u)]) {
          ok = false;
          break;
        }
      if (ok) go(x + 1);
    }
  };
  go(0);
  l.apex = static_cast<int>(l.tuples.size());
  for (int x = 0; x < n; ++x) {
    FinSetMap p{l.apex, d.sizes[x], {}};
    for (const auto& tp : l.tuples) p.img.push_back(tp[x]);
    l.projections.push_back(p);
  }
  return l;
}

ChosenColimit colimit(const SetDiagram& d) {
  const auto& s = *d.shape;
  const int n = s.object_count();
  std::vector<int> offset(n + 1, 0);
  for (int x = 0; x < n; ++x) offset[x + 1] = offset[x] + d.sizes[x];
  std::vector<int> parent(offset[n]);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int u = 0; u < s.morphism_count(); ++u)
    for (int i = 0; i < d.sizes[s.dom(u)]; ++i) {
      int a = find(offset[s.dom(u)] + i), b = find(offset[s.cod(u)] + d.maps[u][i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  ChosenColimit c;
  std::map<int, int> cls;
  for (int e = 0; e < offset[n]; ++e) {
    int r = find(e);
    if (!cls.count(r)) {
      cls[r] = static_cast<int>(c.representatives.size());
      c.representatives.push_back(r);
    }
  }
  c.apex = static_cast<int>(c.representatives.size());
  for (int x = 0; x < n; ++x) {
    FinSetMap inj{d.sizes[x], c.apex, {}};
    for (int i = 0; i < d.sizes[x]; ++i) inj.img.push_back(cls[find(offset[x] + i)]);
    c.injections.push_back(inj);
  }
  return c;
}

namespace {

// All cones with the given apex size, as families of maps.
std::vector<std::vector<FinSetMap>> cones_into(const SetDiagram& d, int apex) {
  const auto& s = *d.shape;
  const int n = s.object_count();
  std::vector<std::vector<FinSetMap>> out;
  std::vector<FinSetMap> cur(n);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back(cur);
      return;
    }
    for (auto& m : all_maps(apex, d.sizes[x])) {
      cur[x] = m;
      bool ok = true;
      for (int u = 0; u < s.morphism_count() && ok; ++u) {
        int a = s.dom(u), b = s.cod(u);
        if (std::max(a, b) != x) continue;
        for (int e = 0; e < apex; ++e)
          if (d.maps[u][cur[a].img[e]] != cur[b].img[e]) {
            ok = false;
            break;
          }
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return out;
}

std::vector<std::vector<FinSetMap>> cocones_from(const SetDiagram& d, int apex) {
  const auto& s = *d.shape;
  const int n = s.object_count();
  std::vector<std::vector<FinSetMap>> out;
  std::vector<FinSetMap> cur(n);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back(cur);
      return;
    }
    for (auto& m : all_maps(d.sizes[x], apex)) {
      cur[x] = m;
      bool ok = true;
      for (int u = 0; u < s.morphism_count() && ok; ++u) {
        int a = s.dom(u), b = s.cod(u);
        if (std::max(a, b) != x) continue;
        for (int e = 0; e < d.sizes[a]; ++e)
          if (cur[b].img[d.maps[u][e]] != cur[a].img[e]) {
            ok = false;
            break;
          }
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

bool limit_is_universal(const SetDiagram& d, const ChosenLimit& l, int max_apex) {
  const int n = d.shape->object_count();
  for (int a = 0; a <= max_apex; ++a)
    for (const auto& cone : cones_into(d, a)) {
      int count = 0;
      for (const auto& u : all_maps(a, l.apex)) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          if (compose(l.projections[x], u) != cone[x]) ok = false;
        if (ok) ++count;
      }
      if (count != 1) return false;
    }
  return true;
}

bool colimit_is_universal(const SetDiagram& d, const ChosenColimit& c, int max_apex) {
  const int n = d.shape->object_count();
  for (int a = 0; a <= max_apex; ++a)
    for (const auto& cocone : cocones_from(d, a)) {
      int count = 0;
      for (const auto& u : all_maps(c.apex, a)) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          if (compose(u, c.injections[x]) != cocone[x]) ok = false;
        if (ok) ++count;
      }
      if (count != 1) return false;
    }
  return true;
}

Mor as_mor(const FinSetMap& f) { return Mor{{f.dom}, {f.cod}, f.img}; }
FinSetMap as_map(const Mor& m) { return FinSetMap{m.dom.at(0), m.cod.at(0), m.data}; }

std::vector<Obj> FinSetCat::objects() const {
  std::vector<Obj> r;
  for (int n = 0; n <= bound_; ++n) r.push_back({n});
  return r;
}

std::vector<Mor> FinSetCat::hom(const Obj& a, const Obj& b) const {
  std::vector<Mor> r;
  for (auto& f : all_maps(a.at(0), b.at(0))) r.push_back(as_mor(f));
  return r;
}

Mor FinSetCat::id(const Obj& a) const { return as_mor(identity_map(a.at(0))); }

Mor FinSetCat::compose(const Mor& g, const Mor& f) const {
  return as_mor(finset::compose(as_map(g), as_map(f)));
}

std::optional<Mor> FinSetCat::inverse(const Mor& f) const {
  if (f.dom != f.cod) return std::nullopt;
  std::vector<int> inv(f.data.size(), -1);
  for (size_t i = 0; i < f.data.size(); ++i) {
    if (inv[f.data[i]] >= 0) return std::nullopt;
    inv[f.data[i]] = static_cast<int>(i);
  }
  return Mor{f.cod, f.dom, inv};
}

std::string FinSetCat::show(const Obj& a) const { return "[" + std::to_string(a.at(0)) + "]"; }

std::vector<Obj> SliceCat::objects() const {
  std::vector<Obj> r;
  for (int n = 0; n <= bound_; ++n) {
    if (n > 0 && base_ == 0) break;
    std::vector<int> leg(n, 0);
    std::function<void(int, int)> go = [&](int i, int lo) {
      if (i == n) {
        r.push_back(leg);
        return;
      }
      for (int v = lo; v < base_; ++v) {
        leg[i] = v;
        go(i + 1, v);
      }
    };
    go(0, 0);
  }
  return r;
}

std::vector<Mor> SliceCat::hom(const Obj& a, const Obj& b) const {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> fiber(base_);
  for (int j = 0; j < static_cast<int>(b.size()); ++j) fiber[b[j]].push_back(j);
  std::vector<Mor> r;
  for (int i = 0; i < n; ++i)
    if (fiber[a[i]].empty()) return r;
  std::vector<int> pos(n, 0);
  while (true) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = fiber[a[i]][pos[i]];
    r.push_back(Mor{a, b, std::move(m)});
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == static_cast<int>(fiber[a[i]].size())) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return r;
}

Mor SliceCat::id(const Obj& a) const {
  std::vector<int> v(a.size());
  std::iota(v.begin(), v.end(), 0);
  return Mor{a, a, v};
}

Mor SliceCat::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CatError("composing non-composable slice maps");
  std::vector<int> h;
  h.reserve(f.data.size());
  for (int x : f.data) h.push_back(g.data[x]);
  return Mor{f.dom, g.cod, std::move(h)};
}

std::optional<Mor> SliceCat::inverse(const Mor& f) const {
  if (f.dom.size() != f.cod.size()) return std::nullopt;
  std::vector<int> inv(f.data.size(), -1);
  for (size_t i = 0; i < f.data.size(); ++i) {
    if (inv[f.data[i]] >= 0) return std::nullopt;
    inv[f.data[i]] = static_cast<int>(i);
  }
  return Mor{f.cod, f.dom, inv};
}

std::string SliceCat::show(const Obj& a) const { return show_vec(a) + "/" + std::to_string(base_); }

CatPtr slice_category(int b, int bound) { return std::make_shared<SliceCat>(b, bound); }

Materialized slice_fincategory(int b, int bound) { return materialize(slice_category(b, bound)); }

namespace {

// f*(leg) as (a, i) pairs with f(a) = leg(i), ranked lexicographically.
std::vector<std::pair<int, int>> pullback_pairs(const FinSetMap& f, const Obj& leg) {
  std::vector<std::vector<int>> fiber(f.cod);
  for (int i = 0; i < static_cast<int>(leg.size()); ++i) fiber.at(leg[i]).push_back(i);
  std::vector<std::pair<int, int>> r;
  for (int a = 0; a < f.dom; ++a)
    for (int i : fiber[f.img[a]]) r.push_back({a, i});
  return r;
}

Obj pairs_leg(const std::vector<std::pair<int, int>>& ps) {
  Obj l;
  l.reserve(ps.size());
  for (auto& p : ps) l.push_back(p.first);
  return l;
}

// Index of pair (a, i) in a pullback_pairs list.
struct PairIndex {
  int width;
  std::vector<int> idx;
  PairIndex(const std::vector<std::pair<int, int>>& ps, int dom, int width) : width(width), idx(dom * width, -1) {
    for (int k = 0; k < static_cast<int>(ps.size()); ++k) idx[ps[k].first * width + ps[k].second] = k;
  }
  int at(int a, int i) const { return idx[a * width + i]; }
};

}  // namespace

Fun change_of_base(const FinSetMap& f, int bound) {
  auto src = slice_category(f.cod, bound);
  auto tgt = slice_category(f.dom, bound);
  auto obj = [f](const Obj& leg) { return pairs_leg(pullback_pairs(f, leg)); };
  auto mor = [f](const Mor& m) {
    auto ps = pullback_pairs(f, m.dom);
    auto qs = pullback_pairs(f, m.cod);
    PairIndex qi(qs, f.dom, static_cast<int>(m.cod.size()));
    std::vector<int> d;
    d.reserve(ps.size());
    for (auto& [a, i] : ps) d.push_back(qi.at(a, m.data[i]));
    return Mor{pairs_leg(ps), pairs_leg(qs), std::move(d)};
  };
  return Fun{src, tgt, obj, mor};
}

Nat coherence_iso(const FinSetMap& f, const FinSetMap& g, int bound) {
  // source element (a, k) with k = (b, i) in g*(w); target element (a, i) in (g f)*(w)
  Fun fs = change_of_base(f, bound);
  Fun gs = change_of_base(g, bound);
  FinSetMap gf = compose(g, f);
  Fun gfs = change_of_base(gf, bound);
  auto at = [f, g, gf](const Obj& w) {
    auto inner = pullback_pairs(g, w);
    Obj gw = pairs_leg(inner);
    auto outer = pullback_pairs(f, gw);
    auto target = pullback_pairs(gf, w);
    PairIndex ti(target, gf.dom, static_cast<int>(w.size()));
    std::vector<int> d;
    for (auto& [a, k] : outer) d.push_back(ti.at(a, inner[k].second));
    return Mor{pairs_leg(outer), pairs_leg(target), d};
  };
  return Nat{compose_fun(fs, gs), gfs, at};
}

Nat identity_coherence(int x, int bound) {
  FinSetMap idm = identity_map(x);
  auto at = [idm](const Obj& w) {
    auto ps = pullback_pairs(idm, w);
    PairIndex pi(ps, idm.dom, static_cast<int>(w.size()));
    std::vector<int> d;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) d.push_back(pi.at(w[i], i));
    return Mor{w, pairs_leg(ps), d};
  };
  return Nat{identity_fun(slice_category(x, bound)), change_of_base(idm, bound), at};
}

Fun postcompose(const FinSetMap& f, int bound) {
  auto src = slice_category(f.dom, bound);
  auto tgt = slice_category(f.cod, bound);
  auto push = [f](const Obj& leg) {
    Obj l;
    for (int v : leg) l.push_back(f.img.at(v));
    return l;
  };
  return Fun{src, tgt, push, [push](const Mor& m) { return Mor{push(m.dom), push(m.cod), m.data}; }};
}

LazyAdjunction sigma_adjunction(const FinSetMap& f, int bound) {
  Fun sigma = postcompose(f, bound);
  Fun pull = change_of_base(f, bound);
  auto unit_at = [f, sigma](const Obj& w) {
    Obj fw = sigma.obj(w);
    auto ps = pullback_pairs(f, fw);
    PairIndex pi(ps, f.dom, static_cast<int>(w.size()));
    std::vector<int> d;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) d.push_back(pi.at(w[i], i));
    return Mor{w, pairs_leg(ps), d};
  };
  auto counit_at = [f](const Obj& v) {
    auto ps = pullback_pairs(f, v);
    Obj l;
    std::vector<int> d;
    for (auto& [a, j] : ps) {
      l.push_back(f.img[a]);
      d.push_back(j);
    }
    return Mor{l, v, d};
  };
  Nat unit{identity_fun(sigma.src), compose_fun(pull, sigma), unit_at};
  Nat counit{compose_fun(sigma, pull), identity_fun(sigma.tgt), counit_at};
  return LazyAdjunction{sigma, pull, unit, counit};
}

IndexedCategory basic_indexed_category(int bound) {
  IndexedCategory F;
  F.name = "slice";
  F.base = std::make_shared<FinSetCat>(bound);
  F.at = [bound](const Obj& x) { return slice_category(x.at(0), bound); };
  F.on_mor = [bound](const Mor& u) { return change_of_base(as_map(u), bound); };
  F.coh = [bound](const Mor& u, const Mor& v) { return coherence_iso(as_map(u), as_map(v), bound); };
  F.unit = [bound](const Obj& x) { return identity_coherence(x.at(0), bound); };
  F.left_adjoint = [bound](const Mor& u) -> std::optional<LazyAdjunction> {
    return sigma_adjunction(as_map(u), bound);
  };
  F.pullback = [](const Mor& f, const Mor& g) {
    ChosenLimit l = pullback(as_map(f), as_map(g));
    return BasePullback{{l.apex}, as_mor(l.projections[0]), as_mor(l.projections[1])};
  };
  F.mediate = [](const BasePullback& p, const Mor& a, const Mor& b) {
    std::vector<int> d;
    for (size_t t = 0; t < a.data.size(); ++t) {
      int found = -1;
      for (int k = 0; k < p.apex.at(0); ++k)
        if (p.p1.data[k] == a.data[t] && p.p2.data[k] == b.data[t]) {
          found = k;
          break;
        }
      if (found < 0) throw CatError("legs do not factor through the pullback");
      d.push_back(found);
    }
    return Mor{a.dom, p.apex, d};
  };
  return F;
}

}  // namespace laxdesc::finset
