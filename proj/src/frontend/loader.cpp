#include "laxdesc/frontend/loader.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "laxdesc/descent.hpp"

namespace laxdesc::frontend {

LoadError::LoadError(Span sp, const std::string& message)
    : std::runtime_error(std::to_string(sp.line) + ":" + std::to_string(sp.col) + ": " + message), span(sp) {}

IndexedCategory IndexedSpec::make() const {
  if (kind == "slice") return finset::basic_indexed_category(bound);
  if (kind == "diagrams") return diagram_indexed_category(bound);
  return power_indexed_category(power_base, bound);
}

namespace {

void require(bool ok, const Name& at, const std::string& message) {
  if (!ok) throw LoadError(at.span, message);
}

void require_valid(const LawReport& r, const Name& at, const std::string& what) {
  if (!r.ok()) throw LoadError(at.span, what + " " + at.text + " is invalid: " + r.violations.front());
}

int object_index(const FinCategory& c, const Name& n) {
  for (int x = 0; x < c.object_count(); ++x)
    if (c.obj_name(x) == n.text) return x;
  return -1;
}

int morphism_index(const FinCategory& c, const Name& n) {
  for (int f = 0; f < c.morphism_count(); ++f)
    if (c.mor_name(f) == n.text) return f;
  return -1;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const Name& n, const std::string& what) {
  auto it = m.find(n.text);
  if (it == m.end()) throw LoadError(n.span, "unknown " + what + " " + n.text);
  return it->second;
}

}  // namespace

FinCatPtr build_category(const CategoryDecl& c, const Name& name) {
  std::map<std::string, int> objs;
  for (const auto& o : c.objects) {
    require(!objs.count(o.text), o, "duplicate object " + o.text);
    objs[o.text] = static_cast<int>(objs.size());
  }
  const int n = static_cast<int>(c.objects.size());
  std::vector<int> dom, cod, ids;
  std::vector<std::string> names;
  std::map<std::string, int> mors;
  for (int x = 0; x < n; ++x) {
    ids.push_back(x);
    dom.push_back(x);
    cod.push_back(x);
    names.push_back("id_" + c.objects[x].text);
    mors[names.back()] = x;
  }
  for (const auto& h : c.homs) {
    require(objs.count(h.src.text), h.src, "unknown object " + h.src.text);
    require(objs.count(h.tgt.text), h.tgt, "unknown object " + h.tgt.text);
    for (const auto& a : h.arrows) {
      require(!mors.count(a.text) && !objs.count(a.text), a, "duplicate name " + a.text);
      mors[a.text] = static_cast<int>(dom.size());
      dom.push_back(objs[h.src.text]);
      cod.push_back(objs[h.tgt.text]);
      names.push_back(a.text);
    }
  }
  auto cat = std::make_shared<FinCategory>(n, dom, cod, ids);
  for (const auto& o : c.objects) cat->object_names.push_back(o.text);
  cat->morphism_names = names;
  cat->fill_identity_laws();
  for (const auto& k : c.composites) {
    for (const Name* x : {&k.g, &k.f, &k.h}) require(mors.count(x->text), *x, "unknown morphism " + x->text);
    int g = mors[k.g.text], f = mors[k.f.text], h = mors[k.h.text];
    require(cod[f] == dom[g], k.g, k.g.text + " . " + k.f.text + " is not composable");
    require(dom[h] == dom[f] && cod[h] == cod[g], k.h, k.h.text + " has the wrong type for " + k.g.text + " . " + k.f.text);
    int old = cat->comp(g, f);
    require(old < 0 || old == h, k.g, "conflicting composite for " + k.g.text + " . " + k.f.text);
    cat->set_comp(g, f, h);
  }
  for (int f = 0; f < cat->morphism_count(); ++f)
    for (int g : cat->out(cod[f]))
      require(cat->comp(g, f) >= 0, name, "missing composite " + names[g] + " . " + names[f] + " in " + name.text);
  cat->finalize();
  require_valid(validate_category(*cat), name, "category");
  return cat;
}

Monoid build_monoid(const MonoidDecl& d, const Name& name) {
  Monoid m;
  m.size = static_cast<int>(d.elements.size());
  std::map<std::string, int> idx;
  for (const auto& e : d.elements) {
    require(!idx.count(e.text), e, "duplicate element " + e.text);
    idx[e.text] = static_cast<int>(m.names.size());
    m.names.push_back(e.text);
  }
  m.unit = 0;
  m.table.assign(m.size * m.size, -1);
  for (int x = 0; x < m.size; ++x) {
    m.table[x] = x;
    m.table[x * m.size] = x;
  }
  for (const auto& p : d.products) {
    for (const Name* e : {&p.x, &p.y, &p.z}) require(idx.count(e->text), *e, "unknown element " + e->text);
    int& slot = m.table[idx[p.x.text] * m.size + idx[p.y.text]];
    require(slot < 0 || slot == idx[p.z.text], p.x, "conflicting product " + p.x.text + " . " + p.y.text);
    slot = idx[p.z.text];
  }
  for (int x = 0; x < m.size; ++x)
    for (int y = 0; y < m.size; ++y)
      require(m.table[x * m.size + y] >= 0, name, "missing product " + m.names[x] + " . " + m.names[y] + " in " + name.text);
  require_valid(validate_monoid(m), name, "monoid");
  return m;
}

namespace {

struct Loader {
  Environment& env;

  FinFunctor functor(const FunctorDecl& d, const Name& name) {
    const FinCatPtr& src = lookup(env.categories, d.src, "category");
    const FinCatPtr& tgt = lookup(env.categories, d.tgt, "category");
    FinFunctor f{src, tgt, std::vector<int>(src->object_count(), -1), std::vector<int>(src->morphism_count(), -1)};
    for (const auto& a : d.assigns) {
      if (int x = object_index(*src, a.from); x >= 0) {
        int y = object_index(*tgt, a.to);
        require(y >= 0, a.to, "unknown object " + a.to.text + " of " + d.tgt.text);
        require(f.obj[x] < 0, a.from, "object " + a.from.text + " assigned twice");
        f.obj[x] = y;
        continue;
      }
      int m = morphism_index(*src, a.from);
      require(m >= 0, a.from, "unknown object or morphism " + a.from.text + " of " + d.src.text);
      int k = morphism_index(*tgt, a.to);
      require(k >= 0, a.to, "unknown morphism " + a.to.text + " of " + d.tgt.text);
      require(f.mor[m] < 0, a.from, "morphism " + a.from.text + " assigned twice");
      f.mor[m] = k;
    }
    for (int x = 0; x < src->object_count(); ++x) {
      require(f.obj[x] >= 0, name, "no image for object " + src->obj_name(x) + " in " + name.text);
      int i = src->identity(x);
      if (f.mor[i] < 0) f.mor[i] = tgt->identity(f.obj[x]);
    }
    for (int m = 0; m < src->morphism_count(); ++m)
      require(f.mor[m] >= 0, name, "no image for morphism " + src->mor_name(m) + " in " + name.text);
    require_valid(check_functor(f), name, "functor");
    return f;
  }

  NatTrans nattrans(const NatTransDecl& d, const Name& name) {
    const FinFunctor& f = lookup(env.functors, d.src, "functor");
    const FinFunctor& g = lookup(env.functors, d.tgt, "functor");
    require(f.src == g.src && f.tgt == g.tgt, name, "functors " + d.src.text + " and " + d.tgt.text + " are not parallel");
    NatTrans t{f, g, std::vector<int>(f.src->object_count(), -1)};
    for (const auto& c : d.components) {
      int x = object_index(*f.src, c.at);
      require(x >= 0, c.at, "unknown object " + c.at.text);
      int m = morphism_index(*f.tgt, c.mor);
      require(m >= 0, c.mor, "unknown morphism " + c.mor.text);
      require(t.comp[x] < 0, c.at, "component at " + c.at.text + " given twice");
      t.comp[x] = m;
    }
    for (int x = 0; x < f.src->object_count(); ++x)
      require(t.comp[x] >= 0, name, "no component at " + f.src->obj_name(x) + " in " + name.text);
    require_valid(check_natural(t), name, "natural transformation");
    return t;
  }

  Adjunction adjunction(const AdjunctionDecl& d, const Name& name) {
    const FinFunctor& l = lookup(env.functors, d.left, "functor");
    const FinFunctor& r = lookup(env.functors, d.right, "functor");
    require(l.src == r.tgt && l.tgt == r.src, name, "functors " + d.left.text + " and " + d.right.text + " are not opposed");
    for (const auto& unit : enumerate_nat_trans(identity_functor(l.src), compose(r, l)))
      for (const auto& counit : enumerate_nat_trans(compose(l, r), identity_functor(l.tgt))) {
        Adjunction a{l, r, unit, counit};
        if (check_adjunction(a).ok()) return a;
      }
    throw LoadError(name.span, d.left.text + " is not left adjoint to " + d.right.text);
  }

  Precategory precategory(const PrecategoryDecl& d, const Name& name) {
    Precategory p;
    if (d.kind == "sigma") {
      p = sigma_precategory(lookup(env.monoids, *d.ref, "monoid"));
    } else if (d.kind == "nerve") {
      p = nerve_precategory(*lookup(env.categories, *d.ref, "category"));
    } else if (d.kind == "eq") {
      p = eq_groupoid(lookup(env.maps, *d.ref, "map"));
    } else {
      require(d.count >= 0, name, "negative size");
      p = discrete_precategory(std::make_shared<finset::FinSetCat>(std::max(1, d.count)), {d.count});
    }
    p.name = name.text;
    require_valid(validate_precategory(p), name, "precategory");
    return p;
  }

  TruncCosimp pseudofunctor(const PseudofunctorDecl& d, const Name& name) {
    TruncCosimp a;
    if (d.kind == "constant") {
      a = constant_trunc_cosimp(lookup(env.categories, d.first, "category"));
    } else {
      const IndexedSpec& f = lookup(env.indexed, d.first, "indexed category");
      const Precategory& p = lookup(env.precategories, *d.second, "precategory");
      require(f.kind != "diagrams", d.first, "diagrams are indexed over categories; precategories live in finite sets");
      if (f.kind == "power")
        for (const Obj& x : p.objs)
          require(x.at(0) <= f.bound, *d.second, "precategory " + d.second->text + " exceeds the bound of " + d.first.text);
      a = compose_indexed_with_precategory(f.make(), p);
    }
    a.name = name.text;
    require_valid(validate_trunc_cosimp(a), name, "pseudofunctor");
    return a;
  }

  void add(const Decl& d) {
    const Name& n = d.name;
    if (const auto* c = std::get_if<CategoryDecl>(&d.body)) {
      env.categories[n.text] = build_category(*c, n);
    } else if (const auto* m = std::get_if<MapDecl>(&d.body)) {
      try {
        env.maps[n.text] = finset::make_map(m->dom, m->cod, m->img);
      } catch (const std::exception& e) {
        throw LoadError(n.span, "map " + n.text + " is invalid: " + e.what());
      }
    } else if (const auto* mo = std::get_if<MonoidDecl>(&d.body)) {
      env.monoids[n.text] = build_monoid(*mo, n);
    } else if (const auto* p = std::get_if<PrecategoryDecl>(&d.body)) {
      env.precategories[n.text] = precategory(*p, n);
    } else if (const auto* x = std::get_if<IndexedDecl>(&d.body)) {
      require(x->bound >= 1, n, "bound must be positive");
      IndexedSpec s{x->kind, x->bound, nullptr};
      if (x->ref) s.power_base = lookup(env.categories, *x->ref, "category");
      env.indexed[n.text] = s;
    } else if (const auto* a = std::get_if<PseudofunctorDecl>(&d.body)) {
      env.pseudofunctors[n.text] = pseudofunctor(*a, n);
    } else if (const auto* f = std::get_if<FunctorDecl>(&d.body)) {
      env.functors[n.text] = functor(*f, n);
    } else if (const auto* t = std::get_if<NatTransDecl>(&d.body)) {
      env.nattrans[n.text] = nattrans(*t, n);
    } else if (const auto* j = std::get_if<AdjunctionDecl>(&d.body)) {
      env.adjunctions[n.text] = adjunction(*j, n);
    }
  }
};

}  // namespace

Environment load(const Document& doc) {
  Environment env;
  env.doc = doc;
  std::set<std::string> seen;
  Loader loader{env};
  for (const auto& d : doc.decls) {
    require(seen.insert(d.name.text).second, d.name, "duplicate declaration " + d.name.text);
    try {
      loader.add(d);
    } catch (const LoadError&) {
      throw;
    } catch (const std::exception& e) {
      throw LoadError(d.name.span, d.kind() + " " + d.name.text + ": " + e.what());
    }
  }
  return env;
}

Environment load_text(const std::string& text) { return load(parse(text)); }

Environment load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return load_text(s.str());
}

}  // namespace laxdesc::frontend
