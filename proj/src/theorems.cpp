#include "laxdesc/theorems.hpp"

#include <algorithm>
#include <numeric>

namespace laxdesc {

FinCatPtr preorder_category(int n, const std::vector<std::pair<int, int>>& relations) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) le[x][x] = true;
  for (auto [a, b] : relations) le.at(a).at(b) = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;
  std::vector<int> dom, cod, ids(n);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (le[a][b]) {
        index[a][b] = static_cast<int>(dom.size());
        dom.push_back(a);
        cod.push_back(b);
      }
  for (int x = 0; x < n; ++x) ids[x] = index[x][x];
  auto c = std::make_shared<FinCategory>(n, dom, cod, ids);
  for (size_t f = 0; f < dom.size(); ++f)
    for (int g : c->out(cod[f])) c->set_comp(g, static_cast<int>(f), index[dom[f]][c->cod(g)]);
  c->finalize();
  return c;
}

FinCatPtr chain_category(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x + 1 < n; ++x) rel.push_back({x, x + 1});
  return preorder_category(n, rel);
}

FinCatPtr graph_category(int n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<int> dom, cod, ids;
  for (int x = 0; x < n; ++x) {
    ids.push_back(x);
    dom.push_back(x);
    cod.push_back(x);
  }
  for (auto [a, b] : arrows) {
    dom.push_back(a);
    cod.push_back(b);
  }
  for (auto [a, b] : arrows)
    for (auto [c, d] : arrows)
      if (b == c) throw CatError("graph category with composable arrows");
  auto c = std::make_shared<FinCategory>(n, dom, cod, ids);
  c->fill_identity_laws();
  c->finalize();
  return c;
}

FinCatPtr parallel_pair_category() { return graph_category(2, {{0, 1}, {0, 1}}); }
FinCatPtr span_category() { return graph_category(3, {{2, 0}, {2, 1}}); }

Coproduct coproduct_category(const FinCatPtr& a, const FinCatPtr& b) {
  const int na = a->object_count(), ma = a->morphism_count();
  std::vector<int> dom, cod, ids;
  for (int f = 0; f < ma; ++f) {
    dom.push_back(a->dom(f));
    cod.push_back(a->cod(f));
  }
  for (int f = 0; f < b->morphism_count(); ++f) {
    dom.push_back(na + b->dom(f));
    cod.push_back(na + b->cod(f));
  }
  for (int x = 0; x < na; ++x) ids.push_back(a->identity(x));
  for (int x = 0; x < b->object_count(); ++x) ids.push_back(ma + b->identity(x));
  auto c = std::make_shared<FinCategory>(na + b->object_count(), dom, cod, ids);
  for (int f = 0; f < ma; ++f)
    for (int g : a->out(a->cod(f))) c->set_comp(g, f, a->comp(g, f));
  for (int f = 0; f < b->morphism_count(); ++f)
    for (int g : b->out(b->cod(f))) c->set_comp(ma + g, ma + f, ma + b->comp(g, f));
  c->finalize();
  Coproduct r{c, FinFunctor{a, c, {}, {}}, FinFunctor{b, c, {}, {}}};
  for (int x = 0; x < na; ++x) r.left.obj.push_back(x);
  for (int f = 0; f < ma; ++f) r.left.mor.push_back(f);
  for (int x = 0; x < b->object_count(); ++x) r.right.obj.push_back(na + x);
  for (int f = 0; f < b->morphism_count(); ++f) r.right.mor.push_back(ma + f);
  return r;
}

Inflation inflate_category(const FinCatPtr& y, const std::vector<int>& pi) {
  const int k = static_cast<int>(pi.size());
  std::vector<int> section(y->object_count(), -1);
  for (int s = 0; s < k; ++s)
    if (section.at(pi[s]) < 0) section[pi[s]] = s;
  for (int v : section)
    if (v < 0) throw CatError("inflation map is not surjective");
  std::vector<int> dom, cod, under;
  std::map<std::tuple<int, int, int>, int> index;
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t)
      for (int f : y->hom_ids(pi[s], pi[t])) {
        index[{s, t, f}] = static_cast<int>(dom.size());
        dom.push_back(s);
        cod.push_back(t);
        under.push_back(f);
      }
  std::vector<int> ids;
  for (int s = 0; s < k; ++s) ids.push_back(index.at({s, s, y->identity(pi[s])}));
  auto c = std::make_shared<FinCategory>(k, dom, cod, ids);
  for (size_t f = 0; f < dom.size(); ++f)
    for (int g : c->out(cod[f])) c->set_comp(g, static_cast<int>(f), index.at({dom[f], cod[g], y->comp(under[g], under[f])}));
  c->finalize();
  Inflation r{c, FinFunctor{c, y, pi, under}, FinFunctor{y, c, section, {}}};
  for (int f = 0; f < y->morphism_count(); ++f)
    r.section.mor.push_back(index.at({section[y->dom(f)], section[y->cod(f)], f}));
  return r;
}

namespace {

FinCatPtr empty_category() {
  static const FinCatPtr e = [] {
    auto c = std::make_shared<FinCategory>(0, std::vector<int>{}, std::vector<int>{}, std::vector<int>{});
    c->finalize();
    return FinCatPtr(c);
  }();
  return e;
}

FinCatPtr monoid_cat(const Monoid& m) { return monoid_category(m.size, m.table, m.unit); }

}  // namespace

std::vector<NamedCategory> category_catalog() {
  return {
      {"1", terminal_category()},
      {"1+1", discrete_category(2)},
      {"2", arrow_category()},
      {"Z/2", monoid_cat(cyclic_group(2))},
      {"M2", monoid_cat(idempotent_monoid())},
      {"iso pair", preorder_category(2, {{0, 1}, {1, 0}})},
      {"3", chain_category(3)},
      {"1+1+1", discrete_category(3)},
      {"cospan poset", preorder_category(3, {{0, 2}, {1, 2}})},
      {"span poset", preorder_category(3, {{2, 0}, {2, 1}})},
      {"parallel pair", parallel_pair_category()},
      {"2+1", coproduct_category(arrow_category(), terminal_category()).cat},
  };
}

std::vector<NamedCategory> shape_catalog() {
  return {
      {"empty", empty_category()},
      {"point", terminal_category()},
      {"two points", discrete_category(2)},
      {"arrow", arrow_category()},
      {"parallel pair", parallel_pair_category()},
      {"span", span_category()},
  };
}

std::optional<FinFunctor> random_functor(const FinCatPtr& src, const FinCatPtr& tgt, Rng& rng, size_t cap) {
  auto fs = enumerate_functors(src, tgt, cap);
  if (fs.empty()) return std::nullopt;
  return fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)];
}

FinCatPtr random_preorder(int n, Rng& rng) {
  std::vector<std::pair<int, int>> rel;
  std::bernoulli_distribution coin(0.3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && coin(rng)) rel.push_back({a, b});
  return preorder_category(n, rel);
}

DescentTables tabulate_descent(const TruncCosimp& a) {
  DescentTables t;
  t.a = a;
  t.cells = derived_cells(a);
  t.ld = build_lax_descent(a, a.cats[0]->objects());
  for (int k = 0; k < 3; ++k) t.cats[k] = materialize(a.cats[k]);
  t.l = materialize(t.ld.cat, t.ld.objects);
  t.forget = materialize(t.ld.forget, t.l, t.cats[0]);
  t.d0 = materialize(a.at("d0"), t.cats[0], t.cats[1]);
  t.d1 = materialize(a.at("d1"), t.cats[0], t.cats[1]);
  t.outer0 = compose(materialize(a.at("D0"), t.cats[1], t.cats[2]), t.d0);
  t.outer1 = compose(materialize(a.at("D2"), t.cats[1], t.cats[2]), t.d1);
  t.psi = materialize(t.ld.psi, compose(t.d1, t.forget), compose(t.d0, t.forget), t.l, t.cats[1]);
  return t;
}

MainTheoremReport verify_main_theorem(const DescentTables& t, const FinFunctor& j, const FinFunctor& h,
                                      KanDirection dir) {
  MainTheoremReport rep;
  rep.direction = dir;
  const bool right = dir == KanDirection::right;
  FinFunctor dj = compose(t.forget, j);
  KanExtension ke = right ? right_kan(dj, h) : left_kan(dj, h);
  rep.ran_exists = ke.exists;
  if (!ke.exists) {
    rep.witness = "no Kan extension in A(1)";
    return rep;
  }
  rep.preserved_first = preserves(right ? t.d0 : t.d1, ke);
  rep.preserved_second = preserves(right ? t.outer0 : t.outer1, ke);
  if (!rep.hypotheses()) {
    rep.witness = "not preserved";
    return rep;
  }
  // Transport the extension along the face where it is preserved, then
  // factor the pasting of psi and the universal cell through it.
  const FinFunctor& near = right ? t.d0 : t.d1;
  const FinFunctor& far = right ? t.d1 : t.d0;
  KanExtension moved;
  moved.direction = dir;
  moved.along = h;
  moved.of = compose(near, dj);
  moved.exists = true;
  moved.value = compose(near, ke.value);
  moved.universal = whisker_left(near, ke.universal);
  FinFunctor q = compose(far, ke.value);
  NatTrans psi_j = whisker_right(t.psi, j);
  NatTrans alpha = right ? compose2(psi_j, whisker_left(t.d1, ke.universal), Mode::vertical)
                         : compose2(whisker_left(t.d0, ke.universal), psi_j, Mode::vertical);
  auto phi = factor_through_kan(moved, q, alpha);
  if (!phi) {
    rep.witness = "no induced 2-cell";
    return rep;
  }
  rep.phi_found = true;
  rep.phi = phi;
  const FinFunctor& v = ke.value;
  const auto& bcat = *h.tgt;
  rep.phi_is_datum = true;
  std::vector<Obj> lifted_obj;
  for (int b = 0; b < bcat.object_count(); ++b) {
    const Obj& w = t.cats[0].objs[v.obj[b]];
    const Mor& pb = t.cats[1].mors[phi->comp[b]];
    if (!is_descent_datum(t.a, t.cells, w, pb)) {
      rep.phi_is_datum = false;
      rep.witness = "induced 2-cell is not a descent datum at " + bcat.obj_name(b);
      return rep;
    }
    lifted_obj.push_back(encode_structured({w, pb}));
  }
  FinFunctor jc{h.tgt, t.l.cat, {}, {}};
  for (const Obj& x : lifted_obj) {
    auto k = t.l.find(x);
    if (!k) {
      rep.witness = "lifted object missing from the lax descent category";
      return rep;
    }
    jc.obj.push_back(*k);
  }
  auto find_mor = [&](const Mor& m) -> int {
    auto it = t.l.mor_index.find(m);
    return it == t.l.mor_index.end() ? -1 : it->second;
  };
  for (int g = 0; g < bcat.morphism_count(); ++g) {
    int k = find_mor(Mor{lifted_obj[bcat.dom(g)], lifted_obj[bcat.cod(g)], t.cats[0].mors[v.mor[g]].data});
    if (k < 0) {
      rep.witness = "value on " + bcat.mor_name(g) + " is not a descent morphism";
      return rep;
    }
    jc.mor.push_back(k);
  }
  FinFunctor jch = compose(jc, h);
  NatTrans nt = right ? NatTrans{jch, j, {}} : NatTrans{j, jch, {}};
  for (int s = 0; s < h.src->object_count(); ++s) {
    const Obj& up = t.l.objs[jch.obj[s]];
    const Obj& src = t.l.objs[j.obj[s]];
    const auto& data = t.cats[0].mors[ke.universal.comp[s]].data;
    int k = find_mor(right ? Mor{up, src, data} : Mor{src, up, data});
    if (k < 0) {
      rep.witness = "universal component is not a descent morphism";
      return rep;
    }
    nt.comp.push_back(k);
  }
  rep.lifted = check_functor(jc).ok() && check_natural(nt).ok();
  rep.j_check = jc;
  rep.nu_tilde = nt;
  if (!rep.lifted) {
    rep.witness = "lift is not functorial";
    return rep;
  }
  KanExtension oracle = right ? right_kan(j, h) : left_kan(j, h);
  rep.oracle_exists = oracle.exists;
  if (!oracle.exists) {
    rep.witness = "no Kan extension in the lax descent category";
    return rep;
  }
  auto theta = factor_through_kan(oracle, jc, nt);
  rep.oracle_agreement = theta && is_invertible(*theta);
  if (!rep.oracle_agreement) rep.witness = "lift differs from the direct Kan extension";
  rep.preserved_by_forget = preserves(t.forget, oracle);
  if (!rep.preserved_by_forget && rep.witness.empty()) rep.witness = "forgetful functor does not preserve";
  CreationReport cr = creates(t.forget, j, h, dir);
  rep.reflects = cr.reflects;
  if (!rep.reflects && rep.witness.empty()) rep.witness = "reflection fails: " + cr.witness;
  return rep;
}

MainTheoremReport verify_main_theorem_right(const DescentTables& t, const FinFunctor& j, const FinFunctor& h) {
  return verify_main_theorem(t, j, h, KanDirection::right);
}

MainTheoremReport verify_main_theorem_left(const DescentTables& t, const FinFunctor& j, const FinFunctor& h) {
  return verify_main_theorem(t, j, h, KanDirection::left);
}

namespace {

struct NamedPrecategory {
  std::string name;
  Precategory a;
};

std::vector<NamedPrecategory> precategory_catalog() {
  auto fs = std::make_shared<finset::FinSetCat>(8);
  return {
      {"point", discrete_precategory(fs, {1})},
      {"two points", discrete_precategory(fs, {2})},
      {"sigma Z/2", sigma_precategory(cyclic_group(2))},
      {"sigma M2", sigma_precategory(idempotent_monoid())},
      {"nerve 2", nerve_precategory(*arrow_category())},
      {"nerve 1+1", nerve_precategory(*discrete_category(2))},
  };
}

double ipow(double b, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

RandomCosimp random_cosimp(Rng& rng) {
  static const auto pres = precategory_catalog();
  static const auto xs = category_catalog();
  while (true) {
    const auto& pa = pres[std::uniform_int_distribution<size_t>(0, pres.size() - 1)(rng)];
    const auto& x = xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)];
    int top = pa.a.objs[2].at(0);
    if (ipow(x.cat->morphism_count(), top) > 700 || ipow(x.cat->object_count(), top) > 81) continue;
    RandomCosimp r;
    r.a = compose_indexed_with_precategory(power_indexed_category(x.cat, 8), pa.a);
    r.description = x.name + "^" + pa.name;
    if (std::bernoulli_distribution(0.5)(rng)) {
      std::uint64_t seed = rng();
      r.a = twist(r.a, random_iso_choice(r.a, seed));
      r.description += " twisted " + std::to_string(seed);
    }
    return r;
  }
}

SuiteSummary run_main_theorem_suite(std::uint64_t seed, size_t target, KanDirection dir, size_t max_instances) {
  Rng rng(seed);
  SuiteSummary s;
  static const auto shapes = shape_catalog();
  while (s.instances < max_instances && s.verified + s.counterexamples < target) {
    RandomCosimp rc = random_cosimp(rng);
    DescentTables t = tabulate_descent(rc.a);
    for (int k = 0; k < 10 && s.instances < max_instances && s.verified + s.counterexamples < target; ++k) {
      const auto& sh = shapes[std::uniform_int_distribution<size_t>(0, shapes.size() - 1)(rng)];
      auto j = random_functor(sh.cat, t.l.cat, rng);
      if (!j) continue;
      int pick = std::uniform_int_distribution<int>(0, 2)(rng);
      std::optional<FinFunctor> h;
      std::string bname;
      if (pick == 0) {
        h = functor_to_terminal(sh.cat);
        bname = "1";
      } else if (pick == 1) {
        h = random_functor(sh.cat, arrow_category(), rng);
        bname = "2";
      } else {
        h = identity_functor(sh.cat);
        bname = sh.name;
      }
      if (!h) continue;
      MainTheoremReport rep = verify_main_theorem(t, *j, *h, dir);
      ++s.instances;
      if (!rep.hypotheses()) {
        ++s.vacuous;
      } else if (rep.counterexample()) {
        ++s.counterexamples;
        if (s.first_counterexample.empty())
          s.first_counterexample = rc.description + ", shape " + sh.name + " into " + bname + ": " + rep.witness;
      } else {
        ++s.verified;
      }
    }
  }
  return s;
}

AbsoluteReport verify_absolute_creation(const DescentTables& t) {
  AbsoluteReport r;
  const auto& l = *t.l.cat;
  auto shape = parallel_pair_category();
  auto down = t.cats[0].cat;
  auto down_objs = down->objects();
  for (int x = 0; x < l.object_count(); ++x)
    for (int y = 0; y < l.object_count(); ++y)
      for (int f : l.hom_ids(x, y))
        for (int g : l.hom_ids(x, y)) {
          if (!find_split_coequalizer(*down, down_objs, down->as_mor(t.forget.mor[f]), down->as_mor(t.forget.mor[g])))
            continue;
          ++r.split_pairs;
          FinFunctor j{shape, t.l.cat, {x, y}, {l.identity(x), l.identity(y), f, g}};
          CreationReport cr = creates(t.forget, j, functor_to_terminal(shape), KanDirection::left);
          if (cr.creates())
            ++r.created;
          else if (r.witness.empty())
            r.witness = "pair " + l.mor_name(f) + ", " + l.mor_name(g) + (cr.exists ? "" : " has no coequalizer") +
                        (cr.preserved ? "" : " not preserved") + (cr.reflects ? "" : " not reflected");
        }
  return r;
}

MonadicityTheoremReport verify_monadicity_theorem(const DescentTables& t, const FinFunctor& e) {
  MonadicityTheoremReport r;
  FinFunctor g = compose(t.forget, e);
  auto adj = find_left_adjoint(g);
  if (!adj) return r;
  r.has_left_adjoint = true;
  r.report = is_monadic(lazy(g), lazy(*adj), g.src->objects(), g.tgt->objects());
  return r;
}

SuiteSummary run_monadicity_suite(std::uint64_t seed, size_t target, size_t max_instances) {
  Rng rng(seed);
  SuiteSummary s;
  while (s.instances < max_instances && s.verified + s.counterexamples < target) {
    RandomCosimp rc = random_cosimp(rng);
    DescentTables t = tabulate_descent(rc.a);
    const int n = t.l.cat->object_count();
    FinFunctor e = identity_functor(t.l.cat);
    std::string how = "identity";
    if (n > 0 && std::bernoulli_distribution(0.6)(rng)) {
      std::vector<int> pi(n);
      std::iota(pi.begin(), pi.end(), 0);
      int extra = std::uniform_int_distribution<int>(1, 2)(rng);
      for (int k = 0; k < extra; ++k) pi.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
      std::shuffle(pi.begin(), pi.end(), rng);
      e = inflate_category(t.l.cat, pi).proj;
      how = "inflation";
    }
    MonadicityTheoremReport rep = verify_monadicity_theorem(t, e);
    ++s.instances;
    if (!rep.has_left_adjoint) {
      ++s.vacuous;
    } else if (rep.ok()) {
      ++s.verified;
    } else {
      ++s.counterexamples;
      if (s.first_counterexample.empty())
        s.first_counterexample = rc.description + " with " + how + ": " + rep.report.witness;
    }
  }
  return s;
}

namespace {

FinCatPtr random_fiber(Rng& rng) {
  static const auto xs = category_catalog();
  if (std::bernoulli_distribution(0.25)(rng)) return random_preorder(std::uniform_int_distribution<int>(1, 3)(rng), rng);
  return xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)].cat;
}

std::vector<int> random_surjection(int n, Rng& rng) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < extra; ++k) pi.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

FinCatPtr terminal_domain_base() {
  static const FinCatPtr c = [] {
    // 0 id_t, 1 id_b, 2 p : t -> b, 3 q : b -> t, 4 e = p q
    auto b = std::make_shared<FinCategory>(2, std::vector<int>{0, 1, 0, 1, 1}, std::vector<int>{0, 1, 1, 0, 1},
                                           std::vector<int>{0, 1});
    b->object_names = {"t", "b"};
    b->morphism_names = {"id_t", "id_b", "p", "q", "pq"};
    b->set_comp(3, 2, 0);
    b->set_comp(2, 3, 4);
    b->set_comp(4, 4, 4);
    b->set_comp(4, 2, 2);
    b->set_comp(3, 4, 3);
    b->fill_identity_laws();
    b->finalize();
    return FinCatPtr(b);
  }();
  return c;
}

}  // namespace

TableIndexed terminal_domain_instance(Rng& rng, std::string* description) {
  TableIndexed t;
  t.base = terminal_domain_base();
  FinCatPtr y = random_fiber(rng);
  FinFunctor fp, fq;
  FinCatPtr yb;
  std::string what;
  if (std::bernoulli_distribution(0.5)(rng)) {
    FinCatPtr z = std::bernoulli_distribution(0.25)(rng) ? empty_category() : random_fiber(rng);
    auto g = random_functor(z, y, rng);
    if (!g) {
      z = empty_category();
      g = FinFunctor{z, y, {}, {}};
    }
    Coproduct cp = coproduct_category(y, z);
    yb = cp.cat;
    fq = cp.left;
    fp = FinFunctor{yb, y, {}, {}};
    for (int x = 0; x < y->object_count(); ++x) fp.obj.push_back(x);
    for (int x = 0; x < z->object_count(); ++x) fp.obj.push_back(g->obj[x]);
    for (int f = 0; f < y->morphism_count(); ++f) fp.mor.push_back(f);
    for (int f = 0; f < z->morphism_count(); ++f) fp.mor.push_back(g->mor[f]);
    what = "coproduct with " + std::to_string(z->object_count()) + " extra objects";
  } else {
    Inflation inf = inflate_category(y, random_surjection(y->object_count(), rng));
    yb = inf.cat;
    fp = inf.proj;
    fq = inf.section;
    what = "inflation to " + std::to_string(yb->object_count()) + " objects";
  }
  t.fibers = {y, yb};
  t.reindex = {identity_functor(y), identity_functor(yb), fp, fq, compose(fq, fp)};
  if (description) *description = what;
  return t;
}

TableIndexed arrow_base_instance(Rng& rng, std::string* description) {
  TableIndexed t;
  t.base = arrow_category();
  const auto& c = *t.base;
  int d = -1;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) d = f;
  FinCatPtr g0, g1;
  FinFunctor gd;
  std::string what;
  int family = std::uniform_int_distribution<int>(0, 2)(rng);
  if (family == 0) {
    g0 = random_fiber(rng);
    Inflation inf = inflate_category(g0, random_surjection(g0->object_count(), rng));
    g1 = inf.cat;
    gd = inf.proj;
    what = "projection of an inflation";
  } else if (family == 1) {
    g1 = random_fiber(rng);
    Inflation inf = inflate_category(g1, random_surjection(g1->object_count(), rng));
    g0 = inf.cat;
    gd = inf.section;
    what = "section of an inflation";
  } else {
    while (true) {
      g0 = random_fiber(rng);
      g1 = random_fiber(rng);
      auto f = random_functor(g1, g0, rng);
      if (f) {
        gd = *f;
        break;
      }
    }
    what = "random functor";
  }
  t.fibers = {g0, g1};
  t.reindex.resize(c.morphism_count());
  for (int f = 0; f < c.morphism_count(); ++f)
    t.reindex[f] = c.is_identity(f) ? identity_functor(t.fibers[c.dom(f)]) : gd;
  (void)d;
  if (description) *description = what;
  return t;
}

namespace {

IffSummary run_iff_suite(std::uint64_t seed, size_t count, bool terminal_domain) {
  Rng rng(seed);
  IffSummary s;
  for (size_t i = 0; i < count; ++i) {
    std::string what;
    TableIndexed t = terminal_domain ? terminal_domain_instance(rng, &what) : arrow_base_instance(rng, &what);
    int p = -1;
    for (int f = 0; f < t.base->morphism_count(); ++f)
      if (t.base->dom(f) == 0 && t.base->cod(f) == 1) p = f;
    EffectivenessReport eff = is_effective_descent(t, p);
    bool equivalence = check_equivalence(t.reindex[p]).equivalence();
    ++s.instances;
    if (eff.effective()) ++s.effective;
    if (eff.effective() != equivalence) {
      ++s.counterexamples;
      if (s.first_counterexample.empty())
        s.first_counterexample = what + ": effective " + std::to_string(eff.effective()) + ", equivalence " +
                                 std::to_string(equivalence) + " " + eff.equivalence.witness;
    }
  }
  return s;
}

}  // namespace

IffSummary run_terminal_domain_suite(std::uint64_t seed, size_t count) { return run_iff_suite(seed, count, true); }
IffSummary run_arrow_base_suite(std::uint64_t seed, size_t count) { return run_iff_suite(seed, count, false); }

TruncCosimp sigma_cosimp(const Monoid& m, int bound) {
  return compose_indexed_with_precategory(finset::basic_indexed_category(bound), sigma_precategory(m));
}

}  // namespace laxdesc
