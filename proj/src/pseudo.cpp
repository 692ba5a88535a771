#include "laxdesc/pseudo.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "laxdesc/kan.hpp"

namespace laxdesc {

using delta3::Gen;

const Fun& TruncCosimp::at(const std::string& word) const { return on_mor.at(delta3::delta3().id_of(word)); }

const Nat& TruncCosimp::cell(const std::string& h, const std::string& g) const {
  const auto& d = delta3::delta3();
  return coh.at({d.id_of(h), d.id_of(g)});
}

LawReport validate_trunc_cosimp(const TruncCosimp& a) {
  LawReport r;
  const auto& d = delta3::delta3();
  const auto& c = *d.cat;
  const int m = c.morphism_count();
  if (static_cast<int>(a.on_mor.size()) != m) {
    r.add("functor table has the wrong size");
    return r;
  }
  auto name = [&](int f) { return c.mor_name(f); };
  try {
    for (int f = 0; f < m; ++f) {
      auto fr = check_functor(a.on_mor[f], a.test_objects[c.dom(f)]);
      for (auto& v : fr.violations) r.add("A(" + name(f) + "): " + v);
    }
    for (int g = 0; g < m; ++g)
      for (int h : c.out(c.cod(g))) {
        auto it = a.coh.find({h, g});
        if (it == a.coh.end()) {
          r.add("missing coherence cell for " + name(h) + " . " + name(g));
          continue;
        }
        const Nat& n = it->second;
        const Fun& ah = a.on_mor[h];
        const Fun& ag = a.on_mor[g];
        const Fun& ahg = a.on_mor[c.comp(h, g)];
        const auto& tgt = a.cats[c.cod(h)];
        for (const Obj& u : a.test_objects[c.dom(g)]) {
          Mor k = n.at(u);
          if (k.dom != ah.obj(ag.obj(u)) || k.cod != ahg.obj(u)) {
            r.add("coherence cell for " + name(h) + " . " + name(g) + " has a mistyped component");
            break;
          }
          if (!tgt->is_iso(k)) {
            r.add("coherence cell for " + name(h) + " . " + name(g) + " is not invertible");
            break;
          }
        }
        if (!r.ok()) continue;
        auto nr = check_natural(n, a.test_objects[c.dom(g)]);
        for (auto& v : nr.violations) r.add("coherence cell for " + name(h) + " . " + name(g) + ": " + v);
      }
    for (int x = 0; x < 3; ++x) {
      const Nat& u = a.unit[x];
      for (const Obj& w : a.test_objects[x]) {
        Mor k = u.at(w);
        if (k.dom != w || k.cod != a.on_mor[c.identity(x)].obj(w) || !a.cats[x]->is_iso(k)) {
          r.add("unit cell at object " + c.obj_name(x) + " is mistyped or not invertible");
          break;
        }
      }
    }
    if (!r.ok()) return r;
    // Associativity: a(h, gf) . A(h) a(g, f) = a(hg, f) . a(h, g) A(f)
    for (int f = 0; f < m; ++f)
      for (int g : c.out(c.cod(f)))
        for (int h : c.out(c.cod(g))) {
          const auto& tgt = a.cats[c.cod(h)];
          int gf = c.comp(g, f), hg = c.comp(h, g);
          const Nat& a_h_gf = a.coh.at({h, gf});
          const Nat& a_g_f = a.coh.at({g, f});
          const Nat& a_hg_f = a.coh.at({hg, f});
          const Nat& a_h_g = a.coh.at({h, g});
          for (const Obj& u : a.test_objects[c.dom(f)]) {
            Mor lhs = tgt->compose(a_h_gf.at(u), a.on_mor[h].mor(a_g_f.at(u)));
            Mor rhs = tgt->compose(a_hg_f.at(u), a_h_g.at(a.on_mor[f].obj(u)));
            if (lhs != rhs) {
              r.add("associativity fails for " + name(h) + ", " + name(g) + ", " + name(f) + " at " +
                    a.cats[c.dom(f)]->show(u));
              break;
            }
          }
        }
    // Identity: a(f, id) . A(f) a_x = id and a(id, f) . a_y A(f) = id
    for (int f = 0; f < m; ++f) {
      int x = c.dom(f), y = c.cod(f);
      const auto& tgt = a.cats[y];
      const Nat& right = a.coh.at({f, c.identity(x)});
      const Nat& left = a.coh.at({c.identity(y), f});
      for (const Obj& u : a.test_objects[x]) {
        Obj fu = a.on_mor[f].obj(u);
        if (tgt->compose(right.at(u), a.on_mor[f].mor(a.unit[x].at(u))) != tgt->id(fu) ||
            tgt->compose(left.at(u), a.unit[y].at(fu)) != tgt->id(fu)) {
          r.add("identity coherence fails for " + name(f) + " at " + a.cats[x]->show(u));
          break;
        }
      }
    }
  } catch (const CatError& e) {
    r.add(std::string("evaluation failed: ") + e.what());
  }
  return r;
}

DerivedCells derived_cells(const TruncCosimp& a) {
  DerivedCells d;
  d.s01 = vcomp(invert(a.cell("D0", "d0")), a.cell("D1", "d0"));
  d.s02 = vcomp(invert(a.cell("D0", "d1")), a.cell("D2", "d0"));
  d.s12 = vcomp(invert(a.cell("D1", "d1")), a.cell("D2", "d1"));
  d.n0 = vcomp(invert(a.unit[0]), a.cell("s0", "d0"));
  d.n1 = vcomp(invert(a.unit[0]), a.cell("s0", "d1"));
  return d;
}

namespace {

Nat identity_cell(const Fun& src, const Fun& tgt) {
  auto c = tgt.tgt;
  auto to = tgt.obj;
  return Nat{src, tgt, [c, to](const Obj& x) { return c->id(to(x)); }};
}

void fill_defaults(TruncCosimp& t) {
  for (int i = 0; i < 3; ++i)
    if (t.test_objects[i].empty()) t.test_objects[i] = t.cats[i]->objects();
}

}  // namespace

TruncCosimp constant_trunc_cosimp(CatPtr x) {
  TruncCosimp t;
  t.name = "constant";
  t.cats = {x, x, x};
  const auto& c = *delta3::delta3().cat;
  Fun idf = identity_fun(x);
  t.on_mor.assign(c.morphism_count(), idf);
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h : c.out(c.cod(g))) t.coh.emplace(std::make_pair(h, g), identity_cell(compose_fun(idf, idf), idf));
  for (int i = 0; i < 3; ++i) t.unit[i] = identity_cell(idf, idf);
  fill_defaults(t);
  return t;
}

LawReport validate_monoid(const Monoid& m) {
  LawReport r;
  if (m.size <= 0 || static_cast<int>(m.table.size()) != m.size * m.size || m.unit < 0 || m.unit >= m.size) {
    r.add("monoid table malformed");
    return r;
  }
  for (int v : m.table)
    if (v < 0 || v >= m.size) {
      r.add("monoid table entry out of range");
      return r;
    }
  for (int x = 0; x < m.size; ++x)
    if (m.mul(m.unit, x) != x || m.mul(x, m.unit) != x) r.add("unit law fails at " + std::to_string(x));
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      for (int z = 0; z < m.size; ++z)
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z)))
          r.add("associativity fails at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
  return r;
}

Monoid cyclic_group(int n) {
  Monoid m;
  m.size = n;
  m.unit = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.table.push_back((x + y) % n);
  m.names.push_back("1");
  for (int x = 1; x < n; ++x) m.names.push_back(x == 1 ? "g" : "g" + std::to_string(x));
  return m;
}

Monoid idempotent_monoid() {
  Monoid m;
  m.size = 2;
  m.unit = 0;
  m.table = {0, 1, 1, 1};
  m.names = {"1", "e"};
  return m;
}

Mor Precategory::at(int delta_id) const {
  const auto& mm = delta3::delta3().mors.at(delta_id);
  Mor r = base->id(objs[mm.cod]);
  for (Gen g : mm.word) r = base->compose(gens.at(g), r);
  return r;
}

LawReport validate_precategory(const Precategory& a) {
  LawReport r;
  for (Gen g : delta3::all_gens()) {
    auto it = a.gens.find(g);
    if (it == a.gens.end()) {
      r.add("missing image of " + delta3::gen_name(g));
      continue;
    }
    if (it->second.dom != a.objs[delta3::gen_cod(g)] || it->second.cod != a.objs[delta3::gen_dom(g)])
      r.add("image of " + delta3::gen_name(g) + " has the wrong type");
  }
  if (!r.ok()) return r;
  const auto& d = delta3::delta3();
  std::vector<delta3::Word> words = {{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<delta3::Word> next;
    for (const auto& w : words)
      for (Gen g : delta3::all_gens()) {
        auto x = w;
        x.push_back(g);
        if (!delta3::typable(x)) continue;
        next.push_back(x);
        Mor direct = a.base->id(a.objs[delta3::gen_cod(x.front())]);
        for (Gen y : x) direct = a.base->compose(a.gens.at(y), direct);
        Mor viaform = a.at(d.id_of(delta3::normalize(x)));
        if (direct != viaform) r.add("relation fails for " + delta3::show(delta3::Morphism{0, 0, x}));
      }
    words = next;
  }
  return r;
}

Precategory sigma_precategory(const Monoid& m) {
  const int n = m.size;
  Precategory a;
  a.name = "sigma";
  a.base = std::make_shared<finset::FinSetCat>(std::max(1, n * n));
  a.objs = {Obj{1}, Obj{n}, Obj{n * n}};
  std::vector<int> zeros(n, 0), p0, p1, prod;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      p0.push_back(x);
      prod.push_back(m.mul(x, y));
      p1.push_back(y);
    }
  a.gens[Gen::d0] = Mor{{n}, {1}, zeros};
  a.gens[Gen::d1] = Mor{{n}, {1}, zeros};
  a.gens[Gen::s0] = Mor{{1}, {n}, {m.unit}};
  a.gens[Gen::D0] = Mor{{n * n}, {n}, p0};
  a.gens[Gen::D1] = Mor{{n * n}, {n}, prod};
  a.gens[Gen::D2] = Mor{{n * n}, {n}, p1};
  return a;
}

Precategory discrete_precategory(CatPtr base, const Obj& x) {
  Precategory a;
  a.name = "discrete";
  a.base = base;
  a.objs = {x, x, x};
  for (Gen g : delta3::all_gens()) a.gens[g] = base->id(x);
  return a;
}

Precategory nerve_precategory(const FinCategory& c) {
  const int n = c.object_count();
  const int m = c.morphism_count();
  std::vector<std::pair<int, int>> pairs;  // (f, g) with g after f
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.cod(f))) pairs.push_back({f, g});
  std::sort(pairs.begin(), pairs.end());
  const int t = static_cast<int>(pairs.size());
  Precategory a;
  a.name = "nerve";
  a.base = std::make_shared<finset::FinSetCat>(std::max({n, m, t}));
  a.objs = {Obj{n}, Obj{m}, Obj{t}};
  std::vector<int> dom, cod, ids, first, second, comp;
  for (int f = 0; f < m; ++f) {
    dom.push_back(c.dom(f));
    cod.push_back(c.cod(f));
  }
  for (int x = 0; x < n; ++x) ids.push_back(c.identity(x));
  for (auto [f, g] : pairs) {
    first.push_back(f);
    second.push_back(g);
    comp.push_back(c.comp(g, f));
  }
  a.gens[Gen::d1] = Mor{{m}, {n}, dom};
  a.gens[Gen::d0] = Mor{{m}, {n}, cod};
  a.gens[Gen::s0] = Mor{{n}, {m}, ids};
  a.gens[Gen::D2] = Mor{{t}, {m}, first};
  a.gens[Gen::D1] = Mor{{t}, {m}, comp};
  a.gens[Gen::D0] = Mor{{t}, {m}, second};
  return a;
}

TruncCosimp compose_indexed_with_precategory(const IndexedCategory& f, const Precategory& a) {
  TruncCosimp t;
  t.name = f.name + "." + a.name;
  for (int i = 0; i < 3; ++i) t.cats[i] = f.at(a.objs[i]);
  const auto& c = *delta3::delta3().cat;
  std::vector<Mor> am;
  for (int g = 0; g < c.morphism_count(); ++g) {
    am.push_back(a.at(g));
    t.on_mor.push_back(f.on_mor(am.back()));
  }
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h : c.out(c.cod(g))) t.coh.emplace(std::make_pair(h, g), f.coh(am[h], am[g]));
  for (int i = 0; i < 3; ++i) t.unit[i] = f.unit(a.objs[i]);
  fill_defaults(t);
  return t;
}

Obj encode_category(const FinCategory& c) {
  const int n = c.object_count(), m = c.morphism_count();
  Obj x = {n, m};
  for (int f = 0; f < m; ++f) x.push_back(c.dom(f));
  for (int f = 0; f < m; ++f) x.push_back(c.cod(f));
  for (int i = 0; i < n; ++i) x.push_back(c.identity(i));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) x.push_back(c.cod(f) == c.dom(g) ? c.comp(g, f) : -1);
  return x;
}

FinCatPtr decode_category(const Obj& x) {
  static std::mutex mu;
  static std::map<Obj, FinCatPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  if (x.size() < 2) throw CatError("malformed category encoding");
  const int n = x[0], m = x[1];
  if (static_cast<int>(x.size()) != 2 + 2 * m + n + m * m) throw CatError("malformed category encoding");
  std::vector<int> dom(x.begin() + 2, x.begin() + 2 + m), cod(x.begin() + 2 + m, x.begin() + 2 + 2 * m),
      ids(x.begin() + 2 + 2 * m, x.begin() + 2 + 2 * m + n);
  auto c = std::make_shared<FinCategory>(n, dom, cod, ids);
  const int base = 2 + 2 * m + n;
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (cod[f] == dom[g]) c->set_comp(g, f, x[base + g * m + f]);
  c->finalize();
  cache[x] = c;
  return c;
}

Mor encode_functor(const FinFunctor& f) {
  Mor r{encode_category(*f.src), encode_category(*f.tgt), f.obj};
  r.data.insert(r.data.end(), f.mor.begin(), f.mor.end());
  return r;
}

FinFunctor decode_functor(const Mor& m) {
  FinFunctor f{decode_category(m.dom), decode_category(m.cod), {}, {}};
  const int n = f.src->object_count();
  f.obj.assign(m.data.begin(), m.data.begin() + n);
  f.mor.assign(m.data.begin() + n, m.data.end());
  return f;
}

std::vector<Mor> CatOfCats::hom(const Obj& a, const Obj& b) const {
  std::vector<Mor> r;
  for (const auto& f : enumerate_functors(decode_category(a), decode_category(b))) r.push_back(encode_functor(f));
  return r;
}

Mor CatOfCats::id(const Obj& a) const { return encode_functor(identity_functor(decode_category(a))); }

Mor CatOfCats::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CatError("composing non-composable functors");
  return encode_functor(laxdesc::compose(decode_functor(g), decode_functor(f)));
}

std::string CatOfCats::show(const Obj& a) const {
  auto c = decode_category(a);
  return "cat(" + std::to_string(c->object_count()) + "," + std::to_string(c->morphism_count()) + ")";
}

CatPullback pullback_of_categories(const FinFunctor& p, const FinFunctor& q) {
  const auto& a = *p.src;
  const auto& b = *q.src;
  std::vector<std::pair<int, int>> objs, mors;
  for (int x = 0; x < a.object_count(); ++x)
    for (int y = 0; y < b.object_count(); ++y)
      if (p.obj[x] == q.obj[y]) objs.push_back({x, y});
  for (int f = 0; f < a.morphism_count(); ++f)
    for (int g = 0; g < b.morphism_count(); ++g)
      if (p.mor[f] == q.mor[g]) mors.push_back({f, g});
  auto oi = [&](int x, int y) {
    return static_cast<int>(std::lower_bound(objs.begin(), objs.end(), std::make_pair(x, y)) - objs.begin());
  };
  auto mi = [&](int f, int g) {
    return static_cast<int>(std::lower_bound(mors.begin(), mors.end(), std::make_pair(f, g)) - mors.begin());
  };
  std::vector<int> dom, cod, ids;
  for (auto [f, g] : mors) {
    dom.push_back(oi(a.dom(f), b.dom(g)));
    cod.push_back(oi(a.cod(f), b.cod(g)));
  }
  for (auto [x, y] : objs) ids.push_back(mi(a.identity(x), b.identity(y)));
  auto c = std::make_shared<FinCategory>(static_cast<int>(objs.size()), dom, cod, ids);
  for (size_t k = 0; k < mors.size(); ++k)
    for (int l : c->out(cod[k])) {
      auto [f, g] = mors[k];
      auto [f2, g2] = mors[l];
      c->set_comp(l, static_cast<int>(k), mi(a.comp(f2, f), b.comp(g2, g)));
    }
  c->finalize();
  CatPullback r{c, FinFunctor{c, p.src, {}, {}}, FinFunctor{c, q.src, {}, {}}};
  for (auto [x, y] : objs) {
    r.p1.obj.push_back(x);
    r.p2.obj.push_back(y);
  }
  for (auto [f, g] : mors) {
    r.p1.mor.push_back(f);
    r.p2.mor.push_back(g);
  }
  return r;
}

Obj encode_diagram(const finset::SetDiagram& d) {
  Obj x = d.sizes;
  for (const auto& m : d.maps) x.insert(x.end(), m.begin(), m.end());
  return x;
}

finset::SetDiagram decode_diagram(const FinCatPtr& shape, const Obj& x) {
  finset::SetDiagram d{shape, {}, {}};
  const int n = shape->object_count();
  if (static_cast<int>(x.size()) < n) throw CatError("malformed diagram encoding");
  d.sizes.assign(x.begin(), x.begin() + n);
  size_t pos = n;
  for (int u = 0; u < shape->morphism_count(); ++u) {
    size_t len = d.sizes[shape->dom(u)];
    if (pos + len > x.size()) throw CatError("malformed diagram encoding");
    d.maps.emplace_back(x.begin() + pos, x.begin() + pos + len);
    pos += len;
  }
  if (pos != x.size()) throw CatError("malformed diagram encoding");
  return d;
}

std::vector<finset::FinSetMap> diagram_components(const FinCatPtr& shape, const Mor& m) {
  auto a = decode_diagram(shape, m.dom);
  auto b = decode_diagram(shape, m.cod);
  std::vector<finset::FinSetMap> r;
  size_t pos = 0;
  for (int x = 0; x < shape->object_count(); ++x) {
    r.push_back(finset::FinSetMap{a.sizes[x], b.sizes[x], std::vector<int>(m.data.begin() + pos, m.data.begin() + pos + a.sizes[x])});
    pos += a.sizes[x];
  }
  return r;
}

namespace {

Mor join_components(const Obj& dom, const Obj& cod, const std::vector<finset::FinSetMap>& cs) {
  Mor r{dom, cod, {}};
  for (const auto& c : cs) r.data.insert(r.data.end(), c.img.begin(), c.img.end());
  return r;
}

}  // namespace

std::vector<Obj> DiagramCat::objects() const {
  const auto& s = *shape_;
  const int n = s.object_count();
  std::vector<Obj> out;
  std::vector<int> sizes(n, 0);
  std::function<void(int)> go_sizes = [&](int x) {
    if (x == n) {
      finset::SetDiagram d{shape_, sizes, std::vector<std::vector<int>>(s.morphism_count())};
      std::function<void(int)> go_maps = [&](int u) {
        if (u == s.morphism_count()) {
          if (finset::check_diagram(d).ok()) out.push_back(encode_diagram(d));
          return;
        }
        if (s.is_identity(u)) {
          d.maps[u] = finset::identity_map(sizes[s.dom(u)]).img;
          go_maps(u + 1);
          return;
        }
        for (auto& f : finset::all_maps(sizes[s.dom(u)], sizes[s.cod(u)])) {
          d.maps[u] = f.img;
          go_maps(u + 1);
        }
      };
      go_maps(0);
      return;
    }
    for (int k = 0; k <= bound_; ++k) {
      sizes[x] = k;
      go_sizes(x + 1);
    }
  };
  go_sizes(0);
  return out;
}

std::vector<Mor> DiagramCat::hom(const Obj& a, const Obj& b) const {
  const auto& s = *shape_;
  auto da = decode_diagram(shape_, a);
  auto db = decode_diagram(shape_, b);
  const int n = s.object_count();
  std::vector<Mor> out;
  std::vector<finset::FinSetMap> cs(n);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back(join_components(a, b, cs));
      return;
    }
    for (auto& f : finset::all_maps(da.sizes[x], db.sizes[x])) {
      cs[x] = f;
      bool ok = true;
      for (int u = 0; u < s.morphism_count() && ok; ++u) {
        int d = s.dom(u), e = s.cod(u);
        if (std::max(d, e) != x) continue;
        for (int i = 0; i < da.sizes[d]; ++i)
          if (db.maps[u][cs[d].img[i]] != cs[e].img[da.maps[u][i]]) {
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

Mor DiagramCat::id(const Obj& a) const {
  auto d = decode_diagram(shape_, a);
  std::vector<finset::FinSetMap> cs;
  for (int k : d.sizes) cs.push_back(finset::identity_map(k));
  return join_components(a, a, cs);
}

Mor DiagramCat::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CatError("composing non-composable diagram maps");
  auto fc = diagram_components(shape_, f);
  auto gc = diagram_components(shape_, g);
  std::vector<finset::FinSetMap> cs;
  for (size_t x = 0; x < fc.size(); ++x) cs.push_back(finset::compose(gc[x], fc[x]));
  return join_components(f.dom, g.cod, cs);
}

std::optional<Mor> DiagramCat::inverse(const Mor& f) const {
  auto fc = diagram_components(shape_, f);
  std::vector<finset::FinSetMap> cs;
  for (const auto& c : fc) {
    if (c.dom != c.cod || !finset::is_injective(c)) return std::nullopt;
    finset::FinSetMap inv{c.cod, c.dom, std::vector<int>(c.dom)};
    for (int i = 0; i < c.dom; ++i) inv.img[c.img[i]] = i;
    cs.push_back(inv);
  }
  return join_components(f.cod, f.dom, cs);
}

std::string DiagramCat::show(const Obj& a) const {
  auto d = decode_diagram(shape_, a);
  return show_vec(d.sizes) + (d.maps.empty() ? "" : ":" + show_vec(Obj(a.begin() + d.sizes.size(), a.end())));
}

Fun precomposition(const FinFunctor& p, int bound) {
  auto b = p.tgt;
  auto e = p.src;
  auto src = std::make_shared<DiagramCat>(b, bound);
  auto tgt = std::make_shared<DiagramCat>(e, bound);
  auto obj = [p, b, e](const Obj& x) {
    auto d = decode_diagram(b, x);
    finset::SetDiagram r{e, {}, {}};
    for (int v : p.obj) r.sizes.push_back(d.sizes[v]);
    for (int u : p.mor) r.maps.push_back(d.maps[u]);
    return encode_diagram(r);
  };
  auto mor = [p, b, obj](const Mor& m) {
    auto cs = diagram_components(b, m);
    std::vector<finset::FinSetMap> r;
    for (int v : p.obj) r.push_back(cs[v]);
    return join_components(obj(m.dom), obj(m.cod), r);
  };
  return Fun{src, tgt, obj, mor};
}

LazyAdjunction left_kan_adjunction(const FinFunctor& p, int bound) {
  auto b = p.tgt;
  auto e = p.src;
  Fun right = precomposition(p, bound);
  auto lan_obj = [p, e](const Obj& x) { return encode_diagram(set_left_kan(decode_diagram(e, x), p).value); };
  auto lan_mor = [p, e, b](const Mor& m) {
    auto k1 = set_left_kan(decode_diagram(e, m.dom), p);
    auto k2 = set_left_kan(decode_diagram(e, m.cod), p);
    auto cs = diagram_components(e, m);
    std::vector<finset::FinSetMap> r;
    for (int y = 0; y < b->object_count(); ++y) {
      finset::FinSetMap c{k1.value.sizes[y], k2.value.sizes[y], std::vector<int>(k1.value.sizes[y], -1)};
      const auto& cm = k1.commas[y];
      for (size_t k = 0; k < cm.objs.size(); ++k) {
        int s = cm.objs[k].first;
        for (int i = 0; i < cs[s].dom; ++i) c.img[k1.legs[y][k].img[i]] = k2.legs[y][k].img[cs[s].img[i]];
      }
      r.push_back(c);
    }
    return join_components(encode_diagram(k1.value), encode_diagram(k2.value), r);
  };
  Fun left{right.tgt, right.src, lan_obj, lan_mor};
  auto unit_at = [p, e](const Obj& x) {
    auto d = decode_diagram(e, x);
    auto k = set_left_kan(d, p);
    finset::SetDiagram back{e, {}, {}};
    for (int v : p.obj) back.sizes.push_back(k.value.sizes[v]);
    for (int u : p.mor) back.maps.push_back(k.value.maps[u]);
    return join_components(x, encode_diagram(back), k.universal);
  };
  auto counit_at = [p, b, right](const Obj& x) {
    auto d = decode_diagram(b, x);
    Obj px = right.obj(x);
    auto k = set_left_kan(decode_diagram(p.src, px), p);
    std::vector<finset::FinSetMap> r;
    for (int y = 0; y < b->object_count(); ++y) {
      finset::FinSetMap c{k.value.sizes[y], d.sizes[y], std::vector<int>(k.value.sizes[y], -1)};
      const auto& cm = k.commas[y];
      for (size_t j = 0; j < cm.objs.size(); ++j) {
        auto [s, f] = cm.objs[j];
        for (int i = 0; i < d.sizes[p.obj[s]]; ++i) c.img[k.legs[y][j].img[i]] = d.maps[f][i];
      }
      r.push_back(c);
    }
    return join_components(encode_diagram(k.value), x, r);
  };
  Nat unit{identity_fun(left.src), compose_fun(right, left), unit_at};
  Nat counit{compose_fun(left, right), identity_fun(left.tgt), counit_at};
  return LazyAdjunction{left, right, unit, counit};
}

IndexedCategory diagram_indexed_category(int bound, std::vector<Obj> listed) {
  IndexedCategory f;
  f.name = "diagrams";
  f.base = std::make_shared<CatOfCats>(std::move(listed));
  f.at = [bound](const Obj& e) -> CatPtr { return std::make_shared<DiagramCat>(decode_category(e), bound); };
  f.on_mor = [bound](const Mor& u) { return precomposition(decode_functor(u), bound); };
  f.coh = [bound](const Mor& u, const Mor& v) {
    Fun fu = precomposition(decode_functor(u), bound);
    Fun fv = precomposition(decode_functor(v), bound);
    Fun fvu = precomposition(compose(decode_functor(v), decode_functor(u)), bound);
    return identity_cell(compose_fun(fu, fv), fvu);
  };
  f.unit = [bound](const Obj& e) {
    auto c = decode_category(e);
    Fun fid = precomposition(identity_functor(c), bound);
    return identity_cell(identity_fun(fid.src), fid);
  };
  f.left_adjoint = [bound](const Mor& u) -> std::optional<LazyAdjunction> {
    return left_kan_adjunction(decode_functor(u), bound);
  };
  f.pullback = [](const Mor& a, const Mor& b) {
    auto pb = pullback_of_categories(decode_functor(a), decode_functor(b));
    return BasePullback{encode_category(*pb.apex), encode_functor(pb.p1), encode_functor(pb.p2)};
  };
  f.mediate = [](const BasePullback& pb, const Mor& a, const Mor& b) {
    FinFunctor fa = decode_functor(a), fb = decode_functor(b);
    FinFunctor p1 = decode_functor(pb.p1), p2 = decode_functor(pb.p2);
    FinFunctor m{fa.src, p1.src, {}, {}};
    for (int x = 0; x < fa.src->object_count(); ++x) {
      int found = -1;
      for (int o = 0; o < p1.src->object_count(); ++o)
        if (p1.obj[o] == fa.obj[x] && p2.obj[o] == fb.obj[x]) found = o;
      if (found < 0) throw CatError("functors do not factor through the pullback");
      m.obj.push_back(found);
    }
    for (int u = 0; u < fa.src->morphism_count(); ++u) {
      int found = -1;
      for (int o = 0; o < p1.src->morphism_count(); ++o)
        if (p1.mor[o] == fa.mor[u] && p2.mor[o] == fb.mor[u]) found = o;
      if (found < 0) throw CatError("functors do not factor through the pullback");
      m.mor.push_back(found);
    }
    return encode_functor(m);
  };
  return f;
}

std::vector<Obj> PowerCat::objects() const {
  std::vector<Obj> out;
  const int k = x_->object_count();
  if (n_ > 0 && k == 0) return out;
  Obj cur(n_, 0);
  while (true) {
    out.push_back(cur);
    int i = n_ - 1;
    while (i >= 0 && cur[i] == k - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<Mor> PowerCat::hom(const Obj& a, const Obj& b) const {
  std::vector<Mor> out;
  std::vector<const std::vector<int>*> hs;
  for (int i = 0; i < n_; ++i) {
    hs.push_back(&x_->hom_ids(a[i], b[i]));
    if (hs.back()->empty()) return out;
  }
  std::vector<int> pos(n_, 0);
  while (true) {
    Mor m{a, b, std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) m.data[i] = (*hs[i])[pos[i]];
    out.push_back(std::move(m));
    int i = n_ - 1;
    while (i >= 0 && pos[i] + 1 == static_cast<int>(hs[i]->size())) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return out;
}

Mor PowerCat::id(const Obj& a) const {
  Mor m{a, a, {}};
  for (int v : a) m.data.push_back(x_->identity(v));
  return m;
}

Mor PowerCat::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CatError("composing non-composable tuples");
  Mor m{f.dom, g.cod, std::vector<int>(n_)};
  for (int i = 0; i < n_; ++i) m.data[i] = x_->comp(g.data[i], f.data[i]);
  return m;
}

std::optional<Mor> PowerCat::inverse(const Mor& f) const {
  Mor m{f.cod, f.dom, std::vector<int>(n_)};
  for (int i = 0; i < n_; ++i) {
    m.data[i] = x_->inverse_id(f.data[i]);
    if (m.data[i] < 0) return std::nullopt;
  }
  return m;
}

std::string PowerCat::show(const Obj& a) const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) s += (i ? "," : "") + x_->obj_name(a[i]);
  return s + ")";
}

IndexedCategory power_indexed_category(FinCatPtr x, int bound) {
  IndexedCategory basic = finset::basic_indexed_category(bound);
  IndexedCategory f;
  f.name = "power";
  f.base = basic.base;
  f.pullback = basic.pullback;
  f.mediate = basic.mediate;
  f.at = [x](const Obj& n) -> CatPtr { return std::make_shared<PowerCat>(x, n.at(0)); };
  auto on_mor = [x](const Mor& u) {
    auto src = std::make_shared<PowerCat>(x, u.cod.at(0));
    auto tgt = std::make_shared<PowerCat>(x, u.dom.at(0));
    auto idx = u.data;
    auto obj = [idx](const Obj& t) {
      Obj r;
      for (int i : idx) r.push_back(t.at(i));
      return r;
    };
    auto mor = [idx, obj](const Mor& m) {
      Mor r{obj(m.dom), obj(m.cod), {}};
      for (int i : idx) r.data.push_back(m.data.at(i));
      return r;
    };
    return Fun{src, tgt, obj, mor};
  };
  f.on_mor = on_mor;
  f.coh = [on_mor](const Mor& u, const Mor& v) {
    Mor vu{u.dom, v.cod, finset::compose(finset::as_map(v), finset::as_map(u)).img};
    return identity_cell(compose_fun(on_mor(u), on_mor(v)), on_mor(vu));
  };
  f.unit = [on_mor](const Obj& n) {
    Fun fid = on_mor(finset::as_mor(finset::identity_map(n.at(0))));
    return identity_cell(identity_fun(fid.src), fid);
  };
  f.left_adjoint = [](const Mor&) -> std::optional<LazyAdjunction> { return std::nullopt; };
  return f;
}

TruncCosimp twist(const TruncCosimp& a, IsoChoice choose) {
  TruncCosimp t;
  t.name = a.name + "~";
  t.cats = a.cats;
  t.test_objects = a.test_objects;
  const auto& c = *delta3::delta3().cat;
  const int m = c.morphism_count();
  auto theta = std::make_shared<std::vector<Nat>>();
  auto theta_inv = std::make_shared<std::vector<Nat>>();
  for (int g = 0; g < m; ++g) {
    const Fun& ag = a.on_mor[g];
    auto tc = a.cats[c.cod(g)];
    Fun twisted{ag.src, ag.tgt, [choose, g](const Obj& x) { return choose(g, x).cod; },
                [choose, g, ag, tc](const Mor& f) {
                  Mor th_d = choose(g, f.dom);
                  Mor th_c = choose(g, f.cod);
                  auto inv = tc->inverse(th_d);
                  if (!inv) throw CatError("twisting map is not invertible");
                  return tc->compose(th_c, tc->compose(ag.mor(f), *inv));
                }};
    t.on_mor.push_back(twisted);
    theta->push_back(Nat{ag, twisted, [choose, g](const Obj& x) { return choose(g, x); }});
  }
  for (int g = 0; g < m; ++g) theta_inv->push_back(invert((*theta)[g]));
  for (int g = 0; g < m; ++g)
    for (int h : c.out(c.cod(g))) {
      int hg = c.comp(h, g);
      const Nat& old = a.coh.at({h, g});
      // theta_hg . a(h, g) . (theta_h^-1 * theta_g^-1)
      Nat back = hcomp((*theta_inv)[h], (*theta_inv)[g]);
      Nat cell = vcomp((*theta)[hg], vcomp(old, back));
      cell.src = compose_fun(t.on_mor[h], t.on_mor[g]);
      cell.tgt = t.on_mor[hg];
      t.coh.emplace(std::make_pair(h, g), cell);
    }
  for (int x = 0; x < 3; ++x) {
    int ix = c.identity(x);
    Nat cell = vcomp((*theta)[ix], a.unit[x]);
    cell.tgt = t.on_mor[ix];
    t.unit[x] = cell;
  }
  return t;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

}  // namespace

IsoChoice random_iso_choice(const TruncCosimp& a, std::uint64_t seed) {
  const auto& c = *delta3::delta3().cat;
  std::vector<Fun> funs = a.on_mor;
  std::array<CatPtr, 3> cats = a.cats;
  std::vector<int> cods;
  for (int g = 0; g < c.morphism_count(); ++g) cods.push_back(c.cod(g));
  auto cache = std::make_shared<std::map<std::pair<int, Obj>, Mor>>();
  return [=](int g, const Obj& x) {
    auto key = std::make_pair(g, x);
    if (auto it = cache->find(key); it != cache->end()) return it->second;
    Obj y0 = funs[g].obj(x);
    const auto& cat = cats[cods[g]];
    std::vector<Mor> isos;
    auto objs = cat->objects();
    if (std::find(objs.begin(), objs.end(), y0) == objs.end()) objs.push_back(y0);
    for (const Obj& y : objs)
      for (const Mor& m : cat->hom(y0, y))
        if (cat->is_iso(m)) isos.push_back(m);
    std::uint64_t h = mix(seed, static_cast<std::uint64_t>(g));
    for (int v : x) h = mix(h, static_cast<std::uint64_t>(v + 1));
    Mor pick = isos.at(h % isos.size());
    (*cache)[key] = pick;
    return pick;
  };
}

}  // namespace laxdesc
