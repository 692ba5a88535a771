#include "laxdesc/cat.hpp"

#include <sstream>

namespace laxdesc {

std::string show_vec(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string Cat::show(const Obj& a) const { return show_vec(a); }

std::string Cat::show(const Mor& m) const {
  return show_vec(m.data) + ":" + show(m.dom) + "->" + show(m.cod);
}

std::optional<Mor> Cat::inverse(const Mor& f) const {
  Mor ia = id(f.dom);
  Mor ib = id(f.cod);
  for (const Mor& g : hom(f.cod, f.dom)) {
    if (compose(g, f) == ia && compose(f, g) == ib) return g;
  }
  return std::nullopt;
}

Fun identity_fun(CatPtr c) {
  return Fun{c, c, [](const Obj& x) { return x; }, [](const Mor& f) { return f; }};
}

Fun compose_fun(const Fun& g, const Fun& f) {
  auto go = g.obj;
  auto fo = f.obj;
  auto gm = g.mor;
  auto fm = f.mor;
  return Fun{f.src, g.tgt, [go, fo](const Obj& x) { return go(fo(x)); },
             [gm, fm](const Mor& m) { return gm(fm(m)); }};
}

Nat identity_nat(const Fun& f) {
  auto tgt = f.tgt;
  auto fo = f.obj;
  return Nat{f, f, [tgt, fo](const Obj& x) { return tgt->id(fo(x)); }};
}

Nat vcomp(const Nat& b, const Nat& a) {
  auto c = a.src.tgt;
  auto ba = b.at;
  auto aa = a.at;
  return Nat{a.src, b.tgt, [c, ba, aa](const Obj& x) { return c->compose(ba(x), aa(x)); }};
}

Nat whisker_left(const Fun& g, const Nat& a) {
  auto gm = g.mor;
  auto aa = a.at;
  return Nat{compose_fun(g, a.src), compose_fun(g, a.tgt),
             [gm, aa](const Obj& x) { return gm(aa(x)); }};
}

Nat whisker_right(const Nat& a, const Fun& f) {
  auto fo = f.obj;
  auto aa = a.at;
  return Nat{compose_fun(a.src, f), compose_fun(a.tgt, f),
             [fo, aa](const Obj& x) { return aa(fo(x)); }};
}

Nat hcomp(const Nat& b, const Nat& a) {
  // (b * a)_x = b_{F'x} . G(a_x)
  auto d = b.src.tgt;
  auto gm = b.src.mor;
  auto ba = b.at;
  auto aa = a.at;
  auto f2 = a.tgt.obj;
  return Nat{compose_fun(b.src, a.src), compose_fun(b.tgt, a.tgt),
             [d, gm, ba, aa, f2](const Obj& x) { return d->compose(ba(f2(x)), gm(aa(x))); }};
}

Nat invert(const Nat& a) {
  auto c = a.src.tgt;
  auto aa = a.at;
  return Nat{a.tgt, a.src, [c, aa](const Obj& x) {
               auto inv = c->inverse(aa(x));
               if (!inv) throw CatError("component not invertible at " + c->show(x));
               return *inv;
             }};
}

LawReport check_functor(const Fun& f, const std::vector<Obj>& objs) {
  LawReport r;
  for (const Obj& x : objs) {
    if (f.mor(f.src->id(x)) != f.tgt->id(f.obj(x))) r.add("identity not preserved at " + f.src->show(x));
  }
  for (const Obj& x : objs)
    for (const Obj& y : objs)
      for (const Mor& u : f.src->hom(x, y)) {
        Mor fu = f.mor(u);
        if (fu.dom != f.obj(x) || fu.cod != f.obj(y)) {
          r.add("image of " + f.src->show(u) + " has wrong type");
          continue;
        }
        for (const Obj& z : objs)
          for (const Mor& v : f.src->hom(y, z)) {
            if (f.mor(f.src->compose(v, u)) != f.tgt->compose(f.mor(v), fu))
              r.add("composition not preserved at " + f.src->show(v) + " . " + f.src->show(u));
          }
      }
  return r;
}

LawReport check_natural(const Nat& a, const std::vector<Obj>& objs) {
  LawReport r;
  const auto& c = a.src.tgt;
  for (const Obj& x : objs) {
    Mor ax = a.at(x);
    if (ax.dom != a.src.obj(x) || ax.cod != a.tgt.obj(x)) r.add("component at " + a.src.src->show(x) + " has wrong type");
  }
  if (!r.ok()) return r;
  for (const Obj& x : objs)
    for (const Obj& y : objs)
      for (const Mor& u : a.src.src->hom(x, y)) {
        if (c->compose(a.at(y), a.src.mor(u)) != c->compose(a.tgt.mor(u), a.at(x)))
          r.add("naturality fails at " + a.src.src->show(u));
      }
  return r;
}

LawReport check_adjunction(const LazyAdjunction& adj, const std::vector<Obj>& left_objs,
                           const std::vector<Obj>& right_objs) {
  // left_objs: objects of the left adjoint's source; right_objs: of its target.
  LawReport r;
  const auto& d = adj.left.src;
  const auto& c = adj.left.tgt;
  for (const Obj& x : left_objs) {
    Obj lx = adj.left.obj(x);
    if (c->compose(adj.counit.at(lx), adj.left.mor(adj.unit.at(x))) != c->id(lx))
      r.add("triangle identity fails at " + d->show(x));
  }
  for (const Obj& y : right_objs) {
    Obj ry = adj.right.obj(y);
    if (d->compose(adj.right.mor(adj.counit.at(y)), adj.unit.at(ry)) != d->id(ry))
      r.add("triangle identity fails at " + c->show(y));
  }
  return r;
}

bool nat_equal(const Nat& a, const Nat& b, const std::vector<Obj>& objs) {
  for (const Obj& x : objs)
    if (a.at(x) != b.at(x)) return false;
  return true;
}

bool nat_invertible(const Nat& a, const std::vector<Obj>& objs, Obj* witness) {
  for (const Obj& x : objs) {
    if (!a.src.tgt->is_iso(a.at(x))) {
      if (witness) *witness = x;
      return false;
    }
  }
  return true;
}

}  // namespace laxdesc
