#pragma once

// Brute-force reference computations for the tests. They use the library's
// data types but none of its algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "laxdesc/delta3.hpp"
#include "laxdesc/fincat.hpp"
#include "laxdesc/finset.hpp"
#include "laxdesc/pseudo.hpp"

namespace oracles {

using namespace laxdesc;

// Monotone maps {0..m-1} -> {0..n-1} as image lists.
using Mono = std::vector<int>;

inline std::vector<Mono> monotone_maps(int m, int n) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Mono compose_mono(const Mono& g, const Mono& f) {
  Mono h;
  for (int x : f) h.push_back(g[x]);
  return h;
}

// Cofaces skip a value, the codegeneracy collapses; objects 0, 1, 2 are the
// ordinals of size 1, 2, 3.
inline Mono generator_map(delta3::Gen g) {
  using delta3::Gen;
  switch (g) {
    case Gen::d0: return {1};
    case Gen::d1: return {0};
    case Gen::s0: return {0, 0};
    case Gen::D0: return {1, 2};
    case Gen::D1: return {0, 2};
    case Gen::D2: return {0, 1};
  }
  return {};
}

inline Mono identity_mono(int size) {
  Mono m(size);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

// Words are written left to right as composites, so the last letter acts first.
inline Mono evaluate_word(const delta3::Word& w, int dom) {
  Mono cur = identity_mono(dom + 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = compose_mono(generator_map(*it), cur);
  return cur;
}

// Closure of identities and generators under composition, keyed by (dom, cod).
inline std::map<std::pair<int, int>, std::set<Mono>> generated_homs() {
  std::map<std::pair<int, int>, std::set<Mono>> homs;
  for (int x = 0; x < 3; ++x) homs[{x, x}].insert(identity_mono(x + 1));
  for (auto g : delta3::all_gens()) homs[{delta3::gen_dom(g), delta3::gen_cod(g)}].insert(generator_map(g));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = homs;
    for (auto& [ab, fs] : snapshot)
      for (auto& [bc, gs] : snapshot) {
        if (ab.second != bc.first) continue;
        for (const auto& f : fs)
          for (const auto& g : gs) grew |= homs[{ab.first, bc.second}].insert(compose_mono(g, f)).second;
      }
  }
  return homs;
}

// Monoid homomorphisms m -> End({0..k-1}).
inline int count_monoid_actions(const Monoid& m, int k) {
  std::vector<std::vector<int>> ends;
  std::vector<int> cur(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      ends.push_back(cur);
      return;
    }
    for (int v = 0; v < k; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  int count = 0;
  std::vector<int> choice(m.size, 0);
  std::function<void(int)> pick = [&](int x) {
    if (x == m.size) {
      auto act = [&](int a, int v) { return ends[choice[a]][v]; };
      for (int v = 0; v < k; ++v)
        if (act(m.unit, v) != v) return;
      for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b)
          for (int v = 0; v < k; ++v)
            if (act(m.mul(a, b), v) != act(a, act(b, v))) return;
      ++count;
      return;
    }
    for (size_t e = 0; e < ends.size(); ++e) {
      choice[x] = static_cast<int>(e);
      pick(x + 1);
    }
  };
  pick(0);
  return count;
}

inline bool functor_laws_hold(const FinCategory& a, const FinCategory& b, const std::vector<int>& obj,
                              const std::vector<int>& mor) {
  for (int f = 0; f < a.morphism_count(); ++f)
    if (b.dom(mor[f]) != obj[a.dom(f)] || b.cod(mor[f]) != obj[a.cod(f)]) return false;
  for (int x = 0; x < a.object_count(); ++x)
    if (mor[a.identity(x)] != b.identity(obj[x])) return false;
  for (int f = 0; f < a.morphism_count(); ++f)
    for (int g = 0; g < a.morphism_count(); ++g)
      if (a.cod(f) == a.dom(g) && mor[a.comp(g, f)] != b.comp(mor[g], mor[f])) return false;
  return true;
}

// Every assignment of objects and morphisms, filtered by the functor laws.
inline size_t count_functors(const FinCategory& a, const FinCategory& b) {
  size_t count = 0;
  std::vector<int> obj(a.object_count()), mor(a.morphism_count());
  std::function<void(int)> morphisms = [&](int f) {
    if (f == a.morphism_count()) {
      count += functor_laws_hold(a, b, obj, mor);
      return;
    }
    for (int g = 0; g < b.morphism_count(); ++g) {
      mor[f] = g;
      morphisms(f + 1);
    }
  };
  std::function<void(int)> objects = [&](int x) {
    if (x == a.object_count()) {
      morphisms(0);
      return;
    }
    for (int y = 0; y < b.object_count(); ++y) {
      obj[x] = y;
      objects(x + 1);
    }
  };
  objects(0);
  return count;
}

inline std::vector<int> hom_list(const FinCategory& c, int x, int y) {
  std::vector<int> out;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (c.dom(f) == x && c.cod(f) == y) out.push_back(f);
  return out;
}

inline bool isomorphic_objects(const FinCategory& c, int x, int y) {
  for (int f : hom_list(c, x, y))
    for (int g : hom_list(c, y, x))
      if (c.comp(g, f) == c.identity(x) && c.comp(f, g) == c.identity(y)) return true;
  return false;
}

// Fully faithful by hom-set bijection, essentially surjective by iso search.
inline bool is_equivalence(const FinFunctor& f) {
  const auto& a = *f.src;
  const auto& b = *f.tgt;
  for (int x = 0; x < a.object_count(); ++x)
    for (int y = 0; y < a.object_count(); ++y) {
      std::set<int> image;
      for (int m : hom_list(a, x, y)) image.insert(f.mor[m]);
      auto target = hom_list(b, f.obj[x], f.obj[y]);
      if (image.size() != hom_list(a, x, y).size() || image.size() != target.size()) return false;
    }
  for (int z = 0; z < b.object_count(); ++z) {
    bool hit = false;
    for (int x = 0; x < a.object_count() && !hit; ++x) hit = isomorphic_objects(b, f.obj[x], z);
    if (!hit) return false;
  }
  return true;
}

// A left adjoint to g exists iff every comma category b / g has an initial object.
inline bool has_left_adjoint(const FinFunctor& g) {
  const auto& a = *g.src;
  const auto& b = *g.tgt;
  for (int y = 0; y < b.object_count(); ++y) {
    bool found = false;
    for (int x = 0; x < a.object_count() && !found; ++x)
      for (int eta : hom_list(b, y, g.obj[x])) {
        bool initial = true;
        for (int x2 = 0; x2 < a.object_count() && initial; ++x2)
          for (int f : hom_list(b, y, g.obj[x2])) {
            int factorizations = 0;
            for (int h : hom_list(a, x, x2)) factorizations += b.comp(g.mor[h], eta) == f;
            if (factorizations != 1) {
              initial = false;
              break;
            }
          }
        if (initial) {
          found = true;
          break;
        }
      }
    if (!found) return false;
  }
  return true;
}

// Preorders: a limit of a family is a greatest lower bound.
inline bool leq(const FinCategory& p, int x, int y) { return !hom_list(p, x, y).empty(); }

inline std::optional<int> greatest_lower_bound(const FinCategory& p, const std::vector<int>& family) {
  for (int x = 0; x < p.object_count(); ++x) {
    bool lower = std::all_of(family.begin(), family.end(), [&](int y) { return leq(p, x, y); });
    if (!lower) continue;
    bool greatest = true;
    for (int z = 0; z < p.object_count(); ++z) {
      bool zl = std::all_of(family.begin(), family.end(), [&](int y) { return leq(p, z, y); });
      if (zl && !leq(p, z, x)) greatest = false;
    }
    if (greatest) return x;
  }
  return std::nullopt;
}

inline std::optional<int> least_upper_bound(const FinCategory& p, const std::vector<int>& family) {
  for (int x = 0; x < p.object_count(); ++x) {
    bool upper = std::all_of(family.begin(), family.end(), [&](int y) { return leq(p, y, x); });
    if (!upper) continue;
    bool least = true;
    for (int z = 0; z < p.object_count(); ++z) {
      bool zu = std::all_of(family.begin(), family.end(), [&](int y) { return leq(p, y, z); });
      if (zu && !leq(p, x, z)) least = false;
    }
    if (least) return x;
  }
  return std::nullopt;
}

// Colimit size of a set diagram: elements modulo the maps, by union-find.
inline int colimit_size(const finset::SetDiagram& d) {
  std::vector<int> offset;
  int total = 0;
  for (int s : d.sizes) {
    offset.push_back(total);
    total += s;
  }
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int f = 0; f < d.shape->morphism_count(); ++f)
    for (int v = 0; v < d.sizes[d.shape->dom(f)]; ++v)
      parent[find(offset[d.shape->dom(f)] + v)] = find(offset[d.shape->cod(f)] + d.maps[f][v]);
  int classes = 0;
  for (int x = 0; x < total; ++x) classes += find(x) == x;
  return classes;
}

// Limit size of a set diagram: compatible families counted directly.
inline int limit_size(const finset::SetDiagram& d) {
  int n = d.shape->object_count();
  std::vector<int> pick(n);
  int count = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      for (int f = 0; f < d.shape->morphism_count(); ++f)
        if (d.maps[f][pick[d.shape->dom(f)]] != pick[d.shape->cod(f)]) return;
      ++count;
      return;
    }
    for (int v = 0; v < d.sizes[x]; ++v) {
      pick[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return count;
}

// Multisets of size <= bound over b labels: skeletal objects of Set/b.
inline int slice_objects(int b, int bound) {
  int total = 0;
  for (int n = 0; n <= bound; ++n) {
    // C(n + b - 1, n)
    if (b == 0) {
      total += n == 0;
      continue;
    }
    long c = 1;
    for (int i = 1; i <= n; ++i) c = c * (b - 1 + i) / i;
    total += static_cast<int>(c);
  }
  return total;
}

inline int pullback_size(const finset::FinSetMap& f, const finset::FinSetMap& g) {
  int count = 0;
  for (int x = 0; x < f.dom; ++x)
    for (int y = 0; y < g.dom; ++y) count += f.img[x] == g.img[y];
  return count;
}

inline std::vector<finset::FinSetMap> maps_between(int dom, int cod) {
  std::vector<finset::FinSetMap> out;
  std::vector<int> img(dom, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == dom) {
      out.push_back(finset::FinSetMap{dom, cod, img});
      return;
    }
    for (int v = 0; v < cod; ++v) {
      img[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline bool surjective(const finset::FinSetMap& f) {
  std::set<int> hit(f.img.begin(), f.img.end());
  return static_cast<int>(hit.size()) == f.cod;
}

}  // namespace oracles
