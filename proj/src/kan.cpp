#include "laxdesc/kan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace laxdesc {

int CommaCategory::index(int s, int f) const {
  auto it = std::lower_bound(objs.begin(), objs.end(), std::make_pair(s, f));
  if (it == objs.end() || *it != std::make_pair(s, f)) throw CatError("not an object of the comma category");
  return static_cast<int>(it - objs.begin());
}

namespace {

// under = true: objects (s, f : b -> H s); otherwise (s, f : H s -> b).
CommaCategory build_comma(const FinFunctor& h, int b, bool under) {
  const auto& s = *h.src;
  const auto& t = *h.tgt;
  CommaCategory c;
  for (int x = 0; x < s.object_count(); ++x) {
    const auto& fs = under ? t.hom_ids(b, h.obj[x]) : t.hom_ids(h.obj[x], b);
    for (int f : fs) c.objs.push_back({x, f});
  }
  const int n = static_cast<int>(c.objs.size());
  std::vector<int> dom, cod, ids(n, -1);
  std::vector<std::vector<int>> by_pair(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      auto [x, f] = c.objs[k];
      auto [y, g] = c.objs[l];
      for (int u : s.hom_ids(x, y)) {
        bool ok = under ? t.comp(h.mor[u], f) == g : t.comp(g, h.mor[u]) == f;
        if (!ok) continue;
        int id = static_cast<int>(dom.size());
        dom.push_back(k);
        cod.push_back(l);
        c.arrows.push_back(u);
        by_pair[k * n + l].push_back(id);
        if (k == l && s.is_identity(u)) ids[k] = id;
      }
    }
  auto cat = std::make_shared<FinCategory>(n, dom, cod, ids);
  std::map<std::tuple<int, int, int>, int> lookup;
  for (int m = 0; m < static_cast<int>(dom.size()); ++m) lookup[{dom[m], cod[m], c.arrows[m]}] = m;
  for (int m = 0; m < static_cast<int>(dom.size()); ++m)
    for (int l = 0; l < n; ++l)
      for (int m2 : by_pair[cod[m] * n + l])
        cat->set_comp(m2, m, lookup.at({dom[m], l, s.comp(c.arrows[m2], c.arrows[m])}));
  cat->finalize();
  c.cat = cat;
  c.proj = FinFunctor{cat, h.src, {}, c.arrows};
  for (auto& o : c.objs) c.proj.obj.push_back(o.first);
  return c;
}

}  // namespace

CommaCategory under_comma(int b, const FinFunctor& h) { return build_comma(h, b, true); }
CommaCategory over_comma(const FinFunctor& h, int b) { return build_comma(h, b, false); }

std::vector<std::vector<int>> cones_at(const FinFunctor& d, int apex) {
  const auto& i = *d.src;
  const auto& c = *d.tgt;
  const int n = i.object_count();
  std::vector<std::vector<int>> checks(n);
  for (int u = 0; u < i.morphism_count(); ++u)
    if (!i.is_identity(u)) checks[std::max(i.dom(u), i.cod(u))].push_back(u);
  std::vector<std::vector<int>> out;
  std::vector<int> legs(n, -1);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back(legs);
      return;
    }
    for (int l : c.hom_ids(apex, d.obj[x])) {
      legs[x] = l;
      bool ok = true;
      for (int u : checks[x])
        if (c.comp(d.mor[u], legs[i.dom(u)]) != legs[i.cod(u)]) {
          ok = false;
          break;
        }
      if (ok) go(x + 1);
    }
    legs[x] = -1;
  };
  go(0);
  return out;
}

namespace {

bool limit_against(const FinFunctor& d, const Cone& k, const std::vector<std::vector<std::vector<int>>>& all) {
  const auto& c = *d.tgt;
  const int n = d.src->object_count();
  for (int z = 0; z < c.object_count(); ++z) {
    const auto& hs = c.hom_ids(z, k.apex);
    if (hs.size() != all[z].size()) return false;
    std::set<std::vector<int>> images;
    for (int h : hs) {
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) img[x] = c.comp(k.legs[x], h);
      images.insert(std::move(img));
    }
    if (images.size() != hs.size()) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> all_cones(const FinFunctor& d) {
  std::vector<std::vector<std::vector<int>>> all;
  for (int z = 0; z < d.tgt->object_count(); ++z) all.push_back(cones_at(d, z));
  return all;
}

FinFunctor op_functor(const FinFunctor& d) {
  return opposite(d, opposite(*d.src), opposite(*d.tgt));
}

}  // namespace

bool is_limit_cone(const FinFunctor& d, const Cone& k) { return limit_against(d, k, all_cones(d)); }

std::optional<Cone> find_limit(const FinFunctor& d) {
  auto all = all_cones(d);
  for (int z = 0; z < d.tgt->object_count(); ++z)
    for (const auto& legs : all[z]) {
      Cone k{z, legs};
      if (limit_against(d, k, all)) return k;
    }
  return std::nullopt;
}

bool is_colimit_cocone(const FinFunctor& d, const Cone& c) { return is_limit_cone(op_functor(d), c); }

std::optional<Cone> find_colimit(const FinFunctor& d) { return find_limit(op_functor(d)); }

KanExtension right_kan(const FinFunctor& j, const FinFunctor& h) {
  KanExtension ke;
  ke.direction = KanDirection::right;
  ke.along = h;
  ke.of = j;
  const auto& b = *h.tgt;
  const auto& c = *j.tgt;
  const int nb = b.object_count();
  std::vector<CommaCategory> commas;
  std::vector<Cone> lims;
  for (int y = 0; y < nb; ++y) {
    commas.push_back(under_comma(y, h));
    auto lim = find_limit(compose(j, commas.back().proj));
    if (!lim) {
      ke.failure_witness = y;
      return ke;
    }
    lims.push_back(*lim);
  }
  FinFunctor v{h.tgt, j.tgt, std::vector<int>(nb), std::vector<int>(b.morphism_count(), -1)};
  for (int y = 0; y < nb; ++y) v.obj[y] = lims[y].apex;
  for (int g = 0; g < b.morphism_count(); ++g) {
    int y = b.dom(g), y2 = b.cod(g);
    const auto& cm2 = commas[y2];
    const auto& cm = commas[y];
    for (int m : c.hom_ids(lims[y].apex, lims[y2].apex)) {
      bool ok = true;
      for (size_t k = 0; k < cm2.objs.size() && ok; ++k) {
        auto [s, f] = cm2.objs[k];
        int k1 = cm.index(s, b.comp(f, g));
        if (c.comp(lims[y2].legs[k], m) != lims[y].legs[k1]) ok = false;
      }
      if (ok) {
        v.mor[g] = m;
        break;
      }
    }
    if (v.mor[g] < 0) throw CatError("limit comparison map missing");
  }
  ke.value = v;
  ke.universal = NatTrans{compose(v, h), j, {}};
  for (int s = 0; s < h.src->object_count(); ++s) {
    int y = h.obj[s];
    ke.universal.comp.push_back(lims[y].legs[commas[y].index(s, b.identity(y))]);
  }
  ke.exists = true;
  return ke;
}

KanExtension left_kan(const FinFunctor& j, const FinFunctor& h) {
  auto sop = opposite(*h.src);
  auto bop = opposite(*h.tgt);
  auto cop = opposite(*j.tgt);
  KanExtension r = right_kan(opposite(j, sop, cop), opposite(h, sop, bop));
  KanExtension ke;
  ke.direction = KanDirection::left;
  ke.along = h;
  ke.of = j;
  ke.exists = r.exists;
  ke.failure_witness = r.failure_witness;
  if (!r.exists) return ke;
  ke.value = FinFunctor{h.tgt, j.tgt, r.value.obj, r.value.mor};
  ke.universal = NatTrans{j, compose(ke.value, h), r.universal.comp};
  return ke;
}

std::optional<NatTrans> factor_through_kan(const KanExtension& ke, const FinFunctor& q, const NatTrans& alpha) {
  if (!ke.exists) return std::nullopt;
  const auto& b = *ke.along.tgt;
  const auto& c = *ke.of.tgt;
  const auto& v = ke.value;
  const auto& gam = ke.universal.comp;
  const bool right = ke.direction == KanDirection::right;
  NatTrans beta = right ? NatTrans{q, v, {}} : NatTrans{v, q, {}};
  for (int y = 0; y < b.object_count(); ++y) {
    CommaCategory cm = right ? under_comma(y, ke.along) : over_comma(ke.along, y);
    int found = -1, count = 0;
    const auto& cands = right ? c.hom_ids(q.obj[y], v.obj[y]) : c.hom_ids(v.obj[y], q.obj[y]);
    for (int m : cands) {
      bool ok = true;
      for (auto [s, f] : cm.objs) {
        if (right) {
          // gamma_s . V(f) . m = alpha_s . Q(f)
          if (c.comp(gam[s], c.comp(v.mor[f], m)) != c.comp(alpha.comp[s], q.mor[f])) ok = false;
        } else {
          // m . V(f) . gamma_s = Q(f) . alpha_s
          if (c.comp(m, c.comp(v.mor[f], gam[s])) != c.comp(q.mor[f], alpha.comp[s])) ok = false;
        }
        if (!ok) break;
      }
      if (ok) {
        if (found < 0) found = m;
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
    beta.comp.push_back(found);
  }
  return beta;
}

bool check_kan_universal(const KanExtension& ke, size_t max_functors) {
  if (!ke.exists) return false;
  const bool right = ke.direction == KanDirection::right;
  const auto& c = *ke.of.tgt;
  for (const auto& r : enumerate_functors(ke.along.tgt, ke.of.tgt, max_functors)) {
    FinFunctor rh = compose(r, ke.along);
    auto lhs = right ? enumerate_nat_trans(r, ke.value) : enumerate_nat_trans(ke.value, r);
    auto rhs = right ? enumerate_nat_trans(rh, ke.of) : enumerate_nat_trans(ke.of, rh);
    if (lhs.size() != rhs.size()) return false;
    std::set<std::vector<int>> images;
    for (const auto& beta : lhs) {
      std::vector<int> img;
      for (int s = 0; s < ke.along.src->object_count(); ++s) {
        int bs = beta.comp[ke.along.obj[s]];
        img.push_back(right ? c.comp(ke.universal.comp[s], bs) : c.comp(bs, ke.universal.comp[s]));
      }
      images.insert(img);
    }
    if (images.size() != lhs.size()) return false;
  }
  return true;
}

bool preserves(const FinFunctor& g, const KanExtension& ke) {
  if (!ke.exists) return false;
  FinFunctor gj = compose(g, ke.of);
  KanExtension ke2 = ke.direction == KanDirection::right ? right_kan(gj, ke.along) : left_kan(gj, ke.along);
  if (!ke2.exists) return false;
  FinFunctor gv = compose(g, ke.value);
  NatTrans alpha = whisker_left(g, ke.universal);
  auto beta = factor_through_kan(ke2, gv, alpha);
  return beta && is_invertible(*beta);
}

namespace {

CreationReport creates_right(const FinFunctor& g, const FinFunctor& j0, const FinFunctor& h) {
  CreationReport rep;
  KanExtension ke = right_kan(j0, h);
  rep.exists = ke.exists;
  rep.preserved = ke.exists && preserves(g, ke);
  const auto& a = *g.src;
  const auto& c = *g.tgt;
  for (int y = 0; y < h.tgt->object_count(); ++y) {
    CommaCategory cm = under_comma(y, h);
    FinFunctor d = compose(j0, cm.proj);
    FinFunctor gd = compose(g, d);
    auto down = find_limit(gd);
    if (!down) continue;
    auto down_all = all_cones(gd);
    auto up_all = all_cones(d);
    for (int x = 0; x < a.object_count(); ++x) {
      bool iso = false;
      for (int m : c.hom_ids(g.obj[x], down->apex))
        if (c.inverse_id(m) >= 0) iso = true;
      if (!iso) continue;
      for (const auto& legs : up_all[x]) {
        Cone gk{g.obj[x], {}};
        for (int l : legs) gk.legs.push_back(g.mor[l]);
        if (!limit_against(gd, gk, down_all)) continue;
        if (!limit_against(d, Cone{x, legs}, up_all)) {
          rep.reflects = false;
          rep.witness = "cone at " + a.obj_name(x) + " over " + h.tgt->obj_name(y);
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace

CreationReport creates(const FinFunctor& g, const FinFunctor& j0, const FinFunctor& h, KanDirection dir) {
  if (dir == KanDirection::right) return creates_right(g, j0, h);
  auto aop = opposite(*g.src);
  auto cop = opposite(*g.tgt);
  auto sop = opposite(*h.src);
  auto bop = opposite(*h.tgt);
  return creates_right(opposite(g, aop, cop), opposite(j0, sop, aop), opposite(h, sop, bop));
}

bool is_split_fork(const Cat& c, const SplitFork& k) {
  try {
    return c.compose(k.q, k.f) == c.compose(k.q, k.g) && c.compose(k.q, k.s) == c.id(k.q.cod) &&
           c.compose(k.f, k.t) == c.id(k.f.cod) && c.compose(k.g, k.t) == c.compose(k.s, k.q);
  } catch (const CatError&) {
    return false;
  }
}

std::optional<SplitFork> find_split_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f,
                                                const Mor& g) {
  const Obj& x = f.dom;
  const Obj& y = f.cod;
  std::vector<Mor> ts;
  for (const Mor& t : c.hom(y, x))
    if (c.compose(f, t) == c.id(y)) ts.push_back(t);
  if (ts.empty()) return std::nullopt;
  for (const Obj& z : objs)
    for (const Mor& q : c.hom(y, z)) {
      if (c.compose(q, f) != c.compose(q, g)) continue;
      for (const Mor& s : c.hom(z, y)) {
        if (c.compose(q, s) != c.id(z)) continue;
        Mor sq = c.compose(s, q);
        for (const Mor& t : ts)
          if (c.compose(g, t) == sq) return SplitFork{f, g, q, s, t};
      }
    }
  return std::nullopt;
}

std::vector<SplitFork> enumerate_split_forks(const Cat& c, const std::vector<Obj>& objs, size_t limit) {
  std::vector<SplitFork> out;
  for (const Obj& x : objs)
    for (const Obj& y : objs) {
      auto hs = c.hom(x, y);
      for (const Mor& f : hs)
        for (const Mor& g : hs) {
          if (out.size() >= limit) return out;
          if (auto k = find_split_coequalizer(c, objs, f, g)) out.push_back(*k);
        }
    }
  return out;
}

bool is_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f, const Mor& g, const Mor& q) {
  if (c.compose(q, f) != c.compose(q, g)) return false;
  for (const Obj& z : objs)
    for (const Mor& r : c.hom(f.cod, z)) {
      if (c.compose(r, f) != c.compose(r, g)) continue;
      int count = 0;
      for (const Mor& k : c.hom(q.cod, z))
        if (c.compose(k, q) == r) ++count;
      if (count != 1) return false;
    }
  return true;
}

std::optional<Mor> find_coequalizer(const Cat& c, const std::vector<Obj>& objs, const Mor& f, const Mor& g) {
  for (const Obj& z : objs)
    for (const Mor& q : c.hom(f.cod, z))
      if (is_coequalizer(c, objs, f, g, q)) return q;
  return std::nullopt;
}

SetKan set_left_kan(const finset::SetDiagram& j, const FinFunctor& h) {
  const auto& b = *h.tgt;
  SetKan r;
  r.value.shape = h.tgt;
  for (int y = 0; y < b.object_count(); ++y) {
    r.commas.push_back(over_comma(h, y));
    const auto& cm = r.commas.back();
    finset::SetDiagram d{cm.cat, {}, {}};
    for (auto& o : cm.objs) d.sizes.push_back(j.sizes[o.first]);
    for (int u : cm.arrows) d.maps.push_back(j.maps[u]);
    auto col = finset::colimit(d);
    r.value.sizes.push_back(col.apex);
    r.legs.push_back(col.injections);
  }
  for (int g = 0; g < b.morphism_count(); ++g) {
    int y = b.dom(g), y2 = b.cod(g);
    std::vector<int> img(r.value.sizes[y], -1);
    const auto& cm = r.commas[y];
    for (size_t k = 0; k < cm.objs.size(); ++k) {
      auto [s, f] = cm.objs[k];
      int k2 = r.commas[y2].index(s, b.comp(g, f));
      for (int i = 0; i < j.sizes[s]; ++i) img[r.legs[y][k].img[i]] = r.legs[y2][k2].img[i];
    }
    r.value.maps.push_back(img);
  }
  for (int s = 0; s < h.src->object_count(); ++s) {
    int y = h.obj[s];
    r.universal.push_back(r.legs[y][r.commas[y].index(s, b.identity(y))]);
  }
  return r;
}

SetKan set_right_kan(const finset::SetDiagram& j, const FinFunctor& h) {
  const auto& b = *h.tgt;
  SetKan r;
  r.value.shape = h.tgt;
  std::vector<finset::ChosenLimit> lims;
  for (int y = 0; y < b.object_count(); ++y) {
    r.commas.push_back(under_comma(y, h));
    const auto& cm = r.commas.back();
    finset::SetDiagram d{cm.cat, {}, {}};
    for (auto& o : cm.objs) d.sizes.push_back(j.sizes[o.first]);
    for (int u : cm.arrows) d.maps.push_back(j.maps[u]);
    lims.push_back(finset::limit(d));
    r.value.sizes.push_back(lims.back().apex);
    r.legs.push_back(lims.back().projections);
  }
  for (int g = 0; g < b.morphism_count(); ++g) {
    int y = b.dom(g), y2 = b.cod(g);
    const auto& cm2 = r.commas[y2];
    std::map<std::vector<int>, int> rank;
    for (size_t t = 0; t < lims[y2].tuples.size(); ++t) rank[lims[y2].tuples[t]] = static_cast<int>(t);
    std::vector<int> img;
    for (const auto& tup : lims[y].tuples) {
      std::vector<int> t2;
      for (auto [s, f] : cm2.objs) t2.push_back(tup[r.commas[y].index(s, b.comp(f, g))]);
      img.push_back(rank.at(t2));
    }
    r.value.maps.push_back(img);
  }
  for (int s = 0; s < h.src->object_count(); ++s) {
    int y = h.obj[s];
    r.universal.push_back(r.legs[y][r.commas[y].index(s, b.identity(y))]);
  }
  return r;
}

}  // namespace laxdesc
