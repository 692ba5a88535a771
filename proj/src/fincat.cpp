#include "laxdesc/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace laxdesc {

FinCategory::FinCategory(int objects, std::vector<int> dom, std::vector<int> cod, std::vector<int> identity)
    : n_(objects), dom_(std::move(dom)), cod_(std::move(cod)), id_(std::move(identity)) {
  const int m = morphism_count();
  if (static_cast<int>(cod_.size()) != m || static_cast<int>(id_.size()) != n_)
    throw CatError("malformed category tables");
  hom_.assign(static_cast<size_t>(n_) * n_, {});
  out_.assign(n_, {});
  pos_out_.assign(m, -1);
  for (int f = 0; f < m; ++f) {
    if (dom_[f] < 0 || dom_[f] >= n_ || cod_[f] < 0 || cod_[f] >= n_)
      throw CatError("morphism " + std::to_string(f) + " has an out-of-range endpoint");
    hom_[dom_[f] * n_ + cod_[f]].push_back(f);
    pos_out_[f] = static_cast<int>(out_[dom_[f]].size());
    out_[dom_[f]].push_back(f);
  }
  for (int x = 0; x < n_; ++x)
    if (id_[x] < 0 || id_[x] >= m) throw CatError("identity of object " + std::to_string(x) + " out of range");
  comp_.resize(m);
  for (int f = 0; f < m; ++f) comp_[f].assign(out_[cod_[f]].size(), -1);
  inv_.assign(m, -1);
}

void FinCategory::set_comp(int g, int f, int h) {
  if (cod_.at(f) != dom_.at(g)) throw CatError("set_comp on a non-composable pair");
  if (h < 0 || h >= morphism_count()) throw CatError("composite out of range");
  comp_[f][pos_out_[g]] = h;
}

void FinCategory::fill_identity_laws() {
  for (int f = 0; f < morphism_count(); ++f) {
    int& a = comp_[f][pos_out_[id_[cod_[f]]]];
    if (a < 0) a = f;
    int idd = id_[dom_[f]];
    int& b = comp_[idd][pos_out_[f]];
    if (b < 0) b = f;
  }
}

int FinCategory::comp(int g, int f) const {
  if (cod_.at(f) != dom_.at(g))
    throw CatError("composing non-composable morphisms " + std::to_string(g) + " . " + std::to_string(f));
  return comp_[f][pos_out_[g]];
}

void FinCategory::finalize() {
  for (int f = 0; f < morphism_count(); ++f) {
    inv_[f] = -1;
    for (int g : hom_ids(cod_[f], dom_[f])) {
      if (comp(g, f) == id_[dom_[f]] && comp(f, g) == id_[cod_[f]]) {
        inv_[f] = g;
        break;
      }
    }
  }
}

std::string FinCategory::obj_name(int x) const {
  if (x >= 0 && x < static_cast<int>(object_names.size()) && !object_names[x].empty()) return object_names[x];
  return "o" + std::to_string(x);
}

std::string FinCategory::mor_name(int f) const {
  if (f >= 0 && f < static_cast<int>(morphism_names.size()) && !morphism_names[f].empty()) return morphism_names[f];
  if (f >= 0 && f < morphism_count() && is_identity(f)) return "id_" + obj_name(dom_[f]);
  return "m" + std::to_string(f);
}

std::vector<Obj> FinCategory::objects() const {
  std::vector<Obj> r;
  for (int x = 0; x < n_; ++x) r.push_back({x});
  return r;
}

std::vector<Mor> FinCategory::hom(const Obj& a, const Obj& b) const {
  std::vector<Mor> r;
  for (int f : hom_ids(a.at(0), b.at(0))) r.push_back(as_mor(f));
  return r;
}

Mor FinCategory::id(const Obj& a) const { return as_mor(id_.at(a.at(0))); }

Mor FinCategory::compose(const Mor& g, const Mor& f) const {
  int h = comp(g.data.at(0), f.data.at(0));
  if (h < 0) throw CatError("composite undefined");
  return as_mor(h);
}

std::string FinCategory::show(const Obj& a) const { return obj_name(a.at(0)); }
std::string FinCategory::show(const Mor& m) const { return mor_name(m.data.at(0)); }

std::optional<Mor> FinCategory::inverse(const Mor& f) const {
  int g = inv_.at(f.data.at(0));
  if (g < 0) return std::nullopt;
  return as_mor(g);
}

LawReport validate_category(const FinCategory& c) {
  LawReport r;
  const int n = c.object_count();
  const int m = c.morphism_count();
  for (int x = 0; x < n; ++x) {
    int i = c.identity(x);
    if (c.dom(i) != x || c.cod(i) != x) r.add("identity of " + c.obj_name(x) + " is not an endomorphism of it");
  }
  if (!r.ok()) return r;
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.cod(f))) {
      int h = c.comp(g, f);
      if (h < 0)
        r.add("missing composite " + c.mor_name(g) + " . " + c.mor_name(f));
      else if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g))
        r.add("composite " + c.mor_name(g) + " . " + c.mor_name(f) + " has wrong endpoints");
    }
  if (!r.ok()) return r;
  for (int f = 0; f < m; ++f) {
    if (c.comp(c.identity(c.cod(f)), f) != f) r.add("left unit law fails at " + c.mor_name(f));
    if (c.comp(f, c.identity(c.dom(f))) != f) r.add("right unit law fails at " + c.mor_name(f));
  }
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.cod(f)))
      for (int h : c.out(c.cod(g)))
        if (c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f))
          r.add("associativity fails at " + c.mor_name(h) + " . " + c.mor_name(g) + " . " + c.mor_name(f));
  return r;
}

LawReport check_functor(const FinFunctor& f) {
  LawReport r;
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  if (static_cast<int>(f.obj.size()) != s.object_count() || static_cast<int>(f.mor.size()) != s.morphism_count()) {
    r.add("functor tables have the wrong size");
    return r;
  }
  for (int x = 0; x < s.object_count(); ++x)
    if (f.obj[x] < 0 || f.obj[x] >= t.object_count()) r.add("object image out of range at " + s.obj_name(x));
  for (int u = 0; u < s.morphism_count(); ++u) {
    int v = f.mor[u];
    if (v < 0 || v >= t.morphism_count()) {
      r.add("morphism image out of range at " + s.mor_name(u));
      continue;
    }
    if (t.dom(v) != f.obj[s.dom(u)] || t.cod(v) != f.obj[s.cod(u)]) r.add("image of " + s.mor_name(u) + " has wrong endpoints");
  }
  if (!r.ok()) return r;
  for (int x = 0; x < s.object_count(); ++x)
    if (f.mor[s.identity(x)] != t.identity(f.obj[x])) r.add("identity not preserved at " + s.obj_name(x));
  for (int u = 0; u < s.morphism_count(); ++u)
    for (int v : s.out(s.cod(u)))
      if (f.mor[s.comp(v, u)] != t.comp(f.mor[v], f.mor[u]))
        r.add("composition not preserved at " + s.mor_name(v) + " . " + s.mor_name(u));
  return r;
}

LawReport check_natural(const NatTrans& a) {
  LawReport r;
  const auto& s = *a.src.src;
  const auto& t = *a.src.tgt;
  if (a.src.src != a.tgt.src || a.src.tgt != a.tgt.tgt) {
    r.add("functors are not parallel");
    return r;
  }
  if (static_cast<int>(a.comp.size()) != s.object_count()) {
    r.add("component table has the wrong size");
    return r;
  }
  for (int x = 0; x < s.object_count(); ++x) {
    int c = a.comp[x];
    if (c < 0 || c >= t.morphism_count() || t.dom(c) != a.src.obj[x] || t.cod(c) != a.tgt.obj[x])
      r.add("component at " + s.obj_name(x) + " has wrong type");
  }
  if (!r.ok()) return r;
  for (int u = 0; u < s.morphism_count(); ++u) {
    int x = s.dom(u), y = s.cod(u);
    if (t.comp(a.comp[y], a.src.mor[u]) != t.comp(a.tgt.mor[u], a.comp[x]))
      r.add("naturality square fails at " + s.mor_name(u));
  }
  return r;
}

FinFunctor identity_functor(FinCatPtr c) {
  FinFunctor f{c, c, {}, {}};
  for (int x = 0; x < c->object_count(); ++x) f.obj.push_back(x);
  for (int u = 0; u < c->morphism_count(); ++u) f.mor.push_back(u);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.src, g.tgt, {}, {}};
  for (int x : f.obj) h.obj.push_back(g.obj.at(x));
  for (int u : f.mor) h.mor.push_back(g.mor.at(u));
  return h;
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans a{f, f, {}};
  for (int x : f.obj) a.comp.push_back(f.tgt->identity(x));
  return a;
}

NatTrans compose2(const NatTrans& b, const NatTrans& a, Mode mode) {
  if (mode == Mode::vertical) {
    if (!(a.tgt == b.src)) throw CatError("vertical composition of non-composable 2-cells");
    NatTrans r{a.src, b.tgt, {}};
    for (size_t x = 0; x < a.comp.size(); ++x) r.comp.push_back(a.src.tgt->comp(b.comp[x], a.comp[x]));
    return r;
  }
  // b : G => G' (C -> D), a : F => F' (B -> C)
  if (a.src.tgt.get() != b.src.src.get() && a.src.tgt->object_count() != b.src.src->object_count())
    throw CatError("horizontal composition of non-composable 2-cells");
  NatTrans r{compose(b.src, a.src), compose(b.tgt, a.tgt), {}};
  const auto& d = *b.src.tgt;
  for (size_t x = 0; x < a.comp.size(); ++x)
    r.comp.push_back(d.comp(b.comp[a.tgt.obj[x]], b.src.mor[a.comp[x]]));
  return r;
}

NatTrans whisker_left(const FinFunctor& g, const NatTrans& a) {
  return compose2(identity_nat(g), a, Mode::horizontal);
}

NatTrans whisker_right(const NatTrans& a, const FinFunctor& f) {
  return compose2(a, identity_nat(f), Mode::horizontal);
}

bool is_invertible(const NatTrans& a) {
  for (int c : a.comp)
    if (a.src.tgt->inverse_id(c) < 0) return false;
  return true;
}

std::optional<NatTrans> inverse(const NatTrans& a) {
  NatTrans r{a.tgt, a.src, {}};
  for (int c : a.comp) {
    int i = a.src.tgt->inverse_id(c);
    if (i < 0) return std::nullopt;
    r.comp.push_back(i);
  }
  return r;
}

std::optional<NatTrans> find_natural_iso(const FinFunctor& f, const FinFunctor& g) {
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  const int n = s.object_count();
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x) {
    for (int c : t.hom_ids(f.obj[x], g.obj[x]))
      if (t.inverse_id(c) >= 0) cand[x].push_back(c);
    if (cand[x].empty()) return std::nullopt;
  }
  // morphisms grouped by the later of their endpoints, for incremental checks
  std::vector<std::vector<int>> check_at(n);
  for (int u = 0; u < s.morphism_count(); ++u) check_at[std::max(s.dom(u), s.cod(u))].push_back(u);
  std::vector<int> comp(n, -1);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) return true;
    for (int c : cand[x]) {
      comp[x] = c;
      bool ok = true;
      for (int u : check_at[x]) {
        int a = s.dom(u), b = s.cod(u);
        if (t.comp(comp[b], f.mor[u]) != t.comp(g.mor[u], comp[a])) {
          ok = false;
          break;
        }
      }
      if (ok && go(x + 1)) return true;
    }
    comp[x] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return NatTrans{f, g, comp};
}

EquivalenceReport check_equivalence(const FinFunctor& f) {
  EquivalenceReport r;
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  for (int a = 0; a < s.object_count() && (r.faithful || r.full); ++a)
    for (int b = 0; b < s.object_count(); ++b) {
      std::set<int> img;
      for (int u : s.hom_ids(a, b)) img.insert(f.mor[u]);
      if (img.size() != s.hom_ids(a, b).size() && r.faithful) {
        r.faithful = false;
        if (r.witness.empty()) r.witness = "not faithful on hom(" + s.obj_name(a) + "," + s.obj_name(b) + ")";
      }
      if (img.size() != t.hom_ids(f.obj[a], f.obj[b]).size() && r.full) {
        r.full = false;
        if (r.witness.empty()) r.witness = "not full on hom(" + s.obj_name(a) + "," + s.obj_name(b) + ")";
      }
    }
  for (int y = 0; y < t.object_count(); ++y) {
    bool hit = false;
    for (int x = 0; x < s.object_count() && !hit; ++x)
      for (int c : t.hom_ids(f.obj[x], y))
        if (t.inverse_id(c) >= 0) {
          hit = true;
          break;
        }
    if (!hit) {
      r.essentially_surjective = false;
      if (r.witness.empty()) r.witness = "object " + t.obj_name(y) + " is not in the essential image";
      break;
    }
  }
  return r;
}

std::optional<Adjunction> find_left_adjoint(const FinFunctor& g) {
  // g : C -> D; the left adjoint sends d to an initial object of (d | g).
  const auto& c = *g.src;
  const auto& d = *g.tgt;
  const int nd = d.object_count();
  std::vector<int> lobj(nd, -1), eta(nd, -1);
  for (int y = 0; y < nd && true; ++y) {
    std::vector<std::pair<int, int>> comma;
    for (int x = 0; x < c.object_count(); ++x)
      for (int u : d.hom_ids(y, g.obj[x])) comma.push_back({x, u});
    for (auto [x, u] : comma) {
      bool initial = true;
      for (auto [x2, v] : comma) {
        int count = 0;
        for (int h : c.hom_ids(x, x2))
          if (d.comp(g.mor[h], u) == v) ++count;
        if (count != 1) {
          initial = false;
          break;
        }
      }
      if (initial) {
        lobj[y] = x;
        eta[y] = u;
        break;
      }
    }
    if (lobj[y] < 0) return std::nullopt;
  }
  auto unique_fill = [&](int x, int target, int want) -> int {
    // the unique h : x -> target with g(h) . eta_? = want, where want already includes eta
    int found = -1;
    for (int h : c.hom_ids(x, target))
      if (d.comp(g.mor[h], eta[d.dom(want)]) == want) {
        if (found >= 0) return -2;
        found = h;
      }
    return found;
  };
  FinFunctor l{g.tgt, g.src, lobj, std::vector<int>(d.morphism_count(), -1)};
  for (int f = 0; f < d.morphism_count(); ++f) {
    int want = d.comp(eta[d.cod(f)], f);
    int h = unique_fill(lobj[d.dom(f)], lobj[d.cod(f)], want);
    if (h < 0) return std::nullopt;
    l.mor[f] = h;
  }
  FinFunctor gl = compose(g, l);
  NatTrans unit{identity_functor(g.tgt), gl, eta};
  FinFunctor lg = compose(l, g);
  NatTrans counit{lg, identity_functor(g.src), std::vector<int>(c.object_count(), -1)};
  for (int x = 0; x < c.object_count(); ++x) {
    int gx = g.obj[x];
    int h = unique_fill(lobj[gx], x, d.identity(gx));
    if (h < 0) return std::nullopt;
    counit.comp[x] = h;
  }
  Adjunction adj{l, g, unit, counit};
  if (!check_adjunction(adj).ok()) return std::nullopt;
  return adj;
}

LawReport check_adjunction(const Adjunction& adj) {
  LawReport r;
  r.merge(check_functor(adj.left));
  r.merge(check_functor(adj.right));
  r.merge(check_natural(adj.unit));
  r.merge(check_natural(adj.counit));
  if (!r.ok()) return r;
  const auto& d = *adj.left.src;
  const auto& c = *adj.left.tgt;
  for (int x = 0; x < d.object_count(); ++x) {
    int lx = adj.left.obj[x];
    if (c.comp(adj.counit.comp[lx], adj.left.mor[adj.unit.comp[x]]) != c.identity(lx))
      r.add("triangle identity fails at " + d.obj_name(x));
  }
  for (int y = 0; y < c.object_count(); ++y) {
    int ry = adj.right.obj[y];
    if (d.comp(adj.right.mor[adj.counit.comp[y]], adj.unit.comp[ry]) != d.identity(ry))
      r.add("triangle identity fails at " + c.obj_name(y));
  }
  return r;
}

bool is_conservative(const FinFunctor& g) {
  const auto& s = *g.src;
  const auto& t = *g.tgt;
  for (int u = 0; u < s.morphism_count(); ++u)
    if (s.inverse_id(u) < 0 && t.inverse_id(g.mor[u]) >= 0) return false;
  return true;
}

FinCatPtr opposite(const FinCategory& c) {
  std::vector<int> dom, cod, ids;
  for (int f = 0; f < c.morphism_count(); ++f) {
    dom.push_back(c.cod(f));
    cod.push_back(c.dom(f));
  }
  for (int x = 0; x < c.object_count(); ++x) ids.push_back(c.identity(x));
  auto op = std::make_shared<FinCategory>(c.object_count(), dom, cod, ids);
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.out(c.cod(f))) {
      int h = c.comp(g, f);
      if (h >= 0) op->set_comp(f, g, h);
    }
  op->object_names = c.object_names;
  op->morphism_names = c.morphism_names;
  op->finalize();
  return op;
}

FinFunctor opposite(const FinFunctor& f, FinCatPtr src_op, FinCatPtr tgt_op) {
  return FinFunctor{std::move(src_op), std::move(tgt_op), f.obj, f.mor};
}

FinCatPtr terminal_category() {
  auto c = std::make_shared<FinCategory>(1, std::vector<int>{0}, std::vector<int>{0}, std::vector<int>{0});
  c->fill_identity_laws();
  c->finalize();
  return c;
}

FinCatPtr discrete_category(int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(i);
  auto c = std::make_shared<FinCategory>(n, v, v, v);
  c->fill_identity_laws();
  c->finalize();
  return c;
}

FinCatPtr arrow_category() {
  auto c = std::make_shared<FinCategory>(2, std::vector<int>{0, 1, 0}, std::vector<int>{0, 1, 1},
                                         std::vector<int>{0, 1});
  c->fill_identity_laws();
  c->finalize();
  return c;
}

FinCatPtr monoid_category(int size, const std::vector<int>& table, int unit) {
  std::vector<int> z(size, 0);
  std::vector<int> ids{unit};
  auto c = std::make_shared<FinCategory>(1, z, z, ids);
  for (int g = 0; g < size; ++g)
    for (int f = 0; f < size; ++f) c->set_comp(g, f, table.at(g * size + f));
  c->finalize();
  return c;
}

FinFunctor constant_functor(FinCatPtr src, FinCatPtr tgt, int x) {
  FinFunctor f{src, tgt, std::vector<int>(src->object_count(), x),
               std::vector<int>(src->morphism_count(), tgt->identity(x))};
  return f;
}

FinFunctor functor_to_terminal(FinCatPtr src) { return constant_functor(src, terminal_category(), 0); }

int Materialized::index(const Obj& x) const {
  auto it = obj_index.find(x);
  if (it == obj_index.end()) throw CatError("object " + source->show(x) + " lies outside the materialized range");
  return it->second;
}

int Materialized::index(const Mor& m) const {
  auto it = mor_index.find(m);
  if (it == mor_index.end()) throw CatError("morphism " + source->show(m) + " lies outside the materialized range");
  return it->second;
}

std::optional<int> Materialized::find(const Obj& x) const {
  auto it = obj_index.find(x);
  if (it == obj_index.end()) return std::nullopt;
  return it->second;
}

Materialized materialize(CatPtr c) { return materialize(c, c->objects()); }

Materialized materialize(CatPtr c, const std::vector<Obj>& objs) {
  Materialized m;
  m.source = c;
  m.objs = objs;
  for (size_t i = 0; i < objs.size(); ++i) m.obj_index[objs[i]] = static_cast<int>(i);
  if (m.obj_index.size() != objs.size()) throw CatError("duplicate objects in materialization");
  if (auto fc = std::dynamic_pointer_cast<const FinCategory>(c); fc && objs == fc->objects()) {
    m.cat = fc;
    for (int f = 0; f < fc->morphism_count(); ++f) {
      m.mors.push_back(fc->as_mor(f));
      m.mor_index[m.mors.back()] = f;
    }
    return m;
  }
  const int n = static_cast<int>(objs.size());
  std::vector<int> dom, cod;
  std::vector<std::vector<int>> homs(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (Mor& f : c->hom(objs[a], objs[b])) {
        int id = static_cast<int>(m.mors.size());
        m.mor_index[f] = id;
        m.mors.push_back(std::move(f));
        dom.push_back(a);
        cod.push_back(b);
        homs[a * n + b].push_back(id);
      }
  std::vector<int> ids;
  for (int a = 0; a < n; ++a) ids.push_back(m.index(c->id(objs[a])));
  auto fc = std::make_shared<FinCategory>(n, dom, cod, ids);
  for (int f = 0; f < static_cast<int>(m.mors.size()); ++f)
    for (int z = 0; z < n; ++z)
      for (int g : homs[cod[f] * n + z]) fc->set_comp(g, f, m.index(c->compose(m.mors[g], m.mors[f])));
  for (int a = 0; a < n; ++a) fc->object_names.push_back(c->show(objs[a]));
  fc->finalize();
  m.cat = fc;
  return m;
}

FinFunctor materialize(const Fun& f, const Materialized& s, const Materialized& t) {
  FinFunctor r{s.cat, t.cat, {}, {}};
  for (const Obj& x : s.objs) r.obj.push_back(t.index(f.obj(x)));
  for (const Mor& u : s.mors) r.mor.push_back(t.index(f.mor(u)));
  return r;
}

NatTrans materialize(const Nat& a, const FinFunctor& f, const FinFunctor& g, const Materialized& s,
                     const Materialized& t) {
  NatTrans r{f, g, {}};
  for (const Obj& x : s.objs) r.comp.push_back(t.index(a.at(x)));
  return r;
}

Fun lazy(const FinFunctor& f) {
  auto fo = f.obj;
  auto fm = f.mor;
  auto tgt = f.tgt;
  return Fun{f.src, f.tgt, [fo](const Obj& x) { return Obj{fo.at(x.at(0))}; },
             [fm, tgt](const Mor& u) { return tgt->as_mor(fm.at(u.data.at(0))); }};
}

Nat lazy(const NatTrans& a) {
  auto comp = a.comp;
  auto tgt = a.src.tgt;
  return Nat{lazy(a.src), lazy(a.tgt), [comp, tgt](const Obj& x) { return tgt->as_mor(comp.at(x.at(0))); }};
}

LazyAdjunction lazy(const Adjunction& adj) {
  return LazyAdjunction{lazy(adj.left), lazy(adj.right), lazy(adj.unit), lazy(adj.counit)};
}

}  // namespace laxdesc

namespace laxdesc {

std::vector<FinFunctor> enumerate_functors(FinCatPtr src, FinCatPtr tgt, size_t limit) {
  const auto& s = *src;
  const auto& t = *tgt;
  std::vector<FinFunctor> out;
  FinFunctor f{src, tgt, std::vector<int>(s.object_count(), 0), std::vector<int>(s.morphism_count(), -1)};
  // A composite is checked as soon as its last member is assigned.
  std::function<bool(int)> consistent = [&](int u) {
    for (int a = 0; a <= u; ++a)
      for (int b = 0; b <= u; ++b) {
        if (s.cod(b) != s.dom(a)) continue;
        int h = s.comp(a, b);
        if (h > u || std::max({a, b, h}) != u) continue;
        if (t.comp(f.mor[a], f.mor[b]) != f.mor[h]) return false;
      }
    return true;
  };
  std::function<void(int)> go_mor = [&](int u) {
    if (out.size() >= limit) return;
    if (u == s.morphism_count()) {
      out.push_back(f);
      return;
    }
    if (s.is_identity(u)) {
      f.mor[u] = t.identity(f.obj[s.dom(u)]);
      if (consistent(u)) go_mor(u + 1);
      f.mor[u] = -1;
      return;
    }
    for (int g : t.hom_ids(f.obj[s.dom(u)], f.obj[s.cod(u)])) {
      f.mor[u] = g;
      if (consistent(u)) go_mor(u + 1);
    }
    f.mor[u] = -1;
  };
  std::function<void(int)> go_obj = [&](int x) {
    if (out.size() >= limit) return;
    if (x == s.object_count()) {
      go_mor(0);
      return;
    }
    for (int y = 0; y < t.object_count(); ++y) {
      f.obj[x] = y;
      go_obj(x + 1);
    }
  };
  go_obj(0);
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g, size_t limit) {
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  std::vector<NatTrans> out;
  NatTrans a{f, g, std::vector<int>(s.object_count(), -1)};
  std::function<void(int)> go = [&](int x) {
    if (out.size() >= limit) return;
    if (x == s.object_count()) {
      out.push_back(a);
      return;
    }
    for (int c : t.hom_ids(f.obj[x], g.obj[x])) {
      a.comp[x] = c;
      bool ok = true;
      for (int u = 0; u < s.morphism_count() && ok; ++u) {
        int d = s.dom(u), e = s.cod(u);
        if (std::max(d, e) != x) continue;
        if (t.comp(a.comp[e], f.mor[u]) != t.comp(g.mor[u], a.comp[d])) ok = false;
      }
      if (ok) go(x + 1);
    }
    a.comp[x] = -1;
  };
  go(0);
  return out;
}

EquivalenceReport check_equivalence(const Fun& f, const std::vector<Obj>& src_objs, const std::vector<Obj>& tgt_objs) {
  EquivalenceReport r;
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  std::vector<Obj> images;
  for (const Obj& a : src_objs) images.push_back(f.obj(a));
  for (size_t i = 0; i < src_objs.size() && (r.faithful || r.full); ++i)
    for (size_t j = 0; j < src_objs.size(); ++j) {
      auto hs = s.hom(src_objs[i], src_objs[j]);
      std::set<Mor> img;
      for (const Mor& u : hs) img.insert(f.mor(u));
      if (img.size() != hs.size() && r.faithful) {
        r.faithful = false;
        if (r.witness.empty()) r.witness = "not faithful on hom(" + s.show(src_objs[i]) + "," + s.show(src_objs[j]) + ")";
      }
      if (img.size() != t.hom(images[i], images[j]).size() && r.full) {
        r.full = false;
        if (r.witness.empty()) r.witness = "not full on hom(" + s.show(src_objs[i]) + "," + s.show(src_objs[j]) + ")";
      }
    }
  for (const Obj& y : tgt_objs) {
    bool hit = false;
    for (size_t i = 0; i < images.size() && !hit; ++i)
      for (const Mor& c : t.hom(images[i], y))
        if (t.is_iso(c)) {
          hit = true;
          break;
        }
    if (!hit) {
      r.essentially_surjective = false;
      if (r.witness.empty()) r.witness = "object " + t.show(y) + " is not in the essential image";
      break;
    }
  }
  return r;
}

std::optional<Nat> find_natural_iso(const Fun& f, const Fun& g, const std::vector<Obj>& objs) {
  const auto& s = *f.src;
  const auto& t = *f.tgt;
  const size_t n = objs.size();
  std::vector<std::vector<Mor>> cand(n);
  for (size_t x = 0; x < n; ++x) {
    for (const Mor& c : t.hom(f.obj(objs[x]), g.obj(objs[x])))
      if (t.is_iso(c)) cand[x].push_back(c);
    if (cand[x].empty()) return std::nullopt;
  }
  std::vector<std::vector<std::pair<size_t, std::vector<std::pair<Mor, Mor>>>>> check_at(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<std::pair<Mor, Mor>> arrows;
      for (const Mor& u : s.hom(objs[a], objs[b])) arrows.push_back({f.mor(u), g.mor(u)});
      if (!arrows.empty()) check_at[std::max(a, b)].push_back({a * n + b, std::move(arrows)});
    }
  std::vector<size_t> pick(n, 0);
  std::function<bool(size_t)> go = [&](size_t x) -> bool {
    if (x == n) return true;
    for (size_t k = 0; k < cand[x].size(); ++k) {
      pick[x] = k;
      bool ok = true;
      for (const auto& [ab, arrows] : check_at[x]) {
        size_t a = ab / n, b = ab % n;
        for (const auto& [fu, gu] : arrows)
          if (t.compose(cand[b][pick[b]], fu) != t.compose(gu, cand[a][pick[a]])) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok && go(x + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  auto table = std::make_shared<std::map<Obj, Mor>>();
  for (size_t x = 0; x < n; ++x) (*table)[objs[x]] = cand[x][pick[x]];
  return Nat{f, g, [table](const Obj& x) {
               auto it = table->find(x);
               if (it == table->end()) throw CatError("natural isomorphism evaluated off its objects");
               return it->second;
             }};
}

bool is_conservative(const Fun& g, const std::vector<Obj>& objs, std::string* witness) {
  const auto& s = *g.src;
  const auto& t = *g.tgt;
  for (const Obj& a : objs)
    for (const Obj& b : objs)
      for (const Mor& u : s.hom(a, b))
        if (t.is_iso(g.mor(u)) && !s.is_iso(u)) {
          if (witness) *witness = s.show(u);
          return false;
        }
  return true;
}

}  // namespace laxdesc
