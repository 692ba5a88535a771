// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "laxdesc/delta3.hpp"
#include "laxdesc/descent.hpp"
#include "laxdesc/kan.hpp"
#include "laxdesc/monadics.hpp"
#include "laxdesc/theorems.hpp"
#include "oracles.hpp"

using namespace laxdesc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %-40s %8.2fs  %s\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

std::vector<finset::FinSetMap> maps_up_to(int size) {
  std::vector<finset::FinSetMap> out;
  for (int a = 0; a <= size; ++a)
    for (int b = 0; b <= size; ++b)
      for (auto& m : oracles::maps_between(a, b)) out.push_back(m);
  return out;
}

Outcome delta3_homs() {
  // Expected |hom(x, y)| for objects 1, 2, 3.
  const int expected[3][3] = {{1, 2, 3}, {1, 3, 6}, {0, 0, 1}};
  auto c = delta3::as_fincategory();
  auto closure = oracles::generated_homs();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      int listed = static_cast<int>(oracles::hom_list(*c, x, y).size());
      int generated = closure.count({x, y}) ? static_cast<int>(closure.at({x, y}).size()) : 0;
      if (listed != expected[x][y] || generated != expected[x][y])
        return {false, "hom(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ") = " +
                           std::to_string(listed) + ", closure " + std::to_string(generated)};
    }
  auto conf = delta3::check_confluence(6);
  if (!conf.confluent || !conf.terminating) return {false, conf.witness};
  return {true, std::to_string(conf.words_checked) + " words confluent"};
}

Outcome delta3_relations() {
  using delta3::normalize;
  using delta3::parse_word;
  bool a = parse_word("s0.d1") == parse_word("id1");
  bool b = parse_word("D1.d0") == parse_word("D0.d0");
  bool c = parse_word("D2.d1") == parse_word("D1.d1");
  bool d = normalize({delta3::Gen::s0, delta3::Gen::d0}, 0) == parse_word("id1");
  if (!(a && b && c && d)) return {false, "relation mismatch"};
  return {true, "s0.d1 = id, D1.d0 = D0.d0, D2.d1 = D1.d1"};
}

Outcome monoid_reconstruction() {
  std::string detail;
  for (const auto& [m, want] : std::vector<std::pair<Monoid, int>>{{idempotent_monoid(), 3}, {cyclic_group(2), 2}}) {
    TruncCosimp a = sigma_cosimp(m, 2);
    DerivedCells cells = derived_cells(a);
    int data = static_cast<int>(descent_data(a, cells, Obj{0, 0}).size());
    int oracle = oracles::count_monoid_actions(m, 2);
    if (data != want || oracle != want)
      return {false, "data " + std::to_string(data) + ", oracle " + std::to_string(oracle)};
    auto carriers = a.cats[0]->objects();
    LaxDescent ld = build_lax_descent(a, carriers);
    EMCategory em = em_category(product_monad(m, 4), carriers);
    auto iso = find_carrier_isomorphism(*ld.cat, ld.objects, *em.cat, em.objects);
    if (!iso) return {false, "no isomorphism with the algebras of m x -"};
    detail += std::to_string(data) + " data over [2], " + std::to_string(ld.objects.size()) + " objects; ";
  }
  return {true, detail + "isomorphic to EM"};
}

Outcome kan_along_codiagonal() {
  auto two = discrete_category(2);
  auto h = functor_to_terminal(two);
  auto pb = pullback_of_categories(h, h);
  finset::SetDiagram f{two, {0, 1}, {{}, {0}}};
  auto along = [&](const FinFunctor& p, const FinFunctor& q) {
    finset::SetDiagram fq{pb.apex, {}, {}};
    for (int x = 0; x < pb.apex->object_count(); ++x) fq.sizes.push_back(f.sizes[q.obj[x]]);
    for (int m = 0; m < pb.apex->morphism_count(); ++m) fq.maps.push_back(f.maps[q.mor[m]]);
    return set_left_kan(fq, p).value.sizes;
  };
  bool projections = along(pb.p1, pb.p1) == std::vector<int>{0, 2};
  int lan_h = set_left_kan(f, h).value.sizes[0];
  bool restricted = lan_h == 1;
  auto ind = diagram_indexed_category(2);
  Obj fo = encode_diagram(f);
  BCReport bc = beck_chevalley(ind, encode_functor(h), {fo});
  bool non_invertible = !bc.holds && bc.witness && *bc.witness == fo;
  std::string detail = std::string("values ") + (projections && restricted ? "match" : "differ") +
                       "; Beck-Chevalley mate at f is " + (bc.holds ? "invertible" : "not invertible") +
                       " (distinct projections give " + std::to_string(along(pb.p1, pb.p2)[0]) + "," +
                       std::to_string(along(pb.p1, pb.p2)[1]) + ")";
  return {projections && restricted && non_invertible, detail};
}

Outcome bc_basic() {
  auto f = finset::basic_indexed_category(4);
  size_t squares = 0, objects = 0;
  for (int b = 0; b <= 3; ++b)
    for (int a = 0; a <= 3; ++a)
      for (int c = 0; c <= 3; ++c) {
        auto objs = f.at({c})->objects();
        for (const auto& u : oracles::maps_between(a, b))
          for (const auto& v : oracles::maps_between(c, b)) {
            BCReport r = beck_chevalley(f, finset::as_mor(u), finset::as_mor(v), objs);
            if (!r.adjoints_available || !r.holds)
              return {false, "square " + show_vec(u.img) + " / " + show_vec(v.img) + ": " + r.detail};
            ++squares;
            objects += r.checked;
          }
      }
  return {true, std::to_string(squares) + " squares, " + std::to_string(objects) + " objects"};
}

Outcome effective_slices() {
  size_t maps = 0, effective = 0;
  for (const auto& p : maps_up_to(3)) {
    auto rep = is_effective_descent_slices(p, 4);
    if (rep.effective() != oracles::surjective(p))
      return {false, "disagreement at " + show_vec(p.img) + " into " + std::to_string(p.cod)};
    ++maps;
    effective += rep.effective();
  }
  return {true, std::to_string(maps) + " maps, " + std::to_string(effective) + " effective"};
}

Outcome iff_suites() {
  IffSummary t = run_terminal_domain_suite(7001, 100);
  IffSummary u = run_arrow_base_suite(7002, 100);
  if (t.counterexamples) return {false, "terminal domain: " + t.first_counterexample};
  if (u.counterexamples) return {false, "arrow base: " + u.first_counterexample};
  for (int b = 1; b <= 3; ++b) {
    auto p = finset::make_map(1, b, {0});
    auto f = finset::basic_indexed_category(3);
    Mor pm = finset::as_mor(p);
    bool equivalence = check_equivalence(f.on_mor(pm), f.at(pm.cod)->objects(), f.at(pm.dom)->objects()).equivalence();
    if (is_effective_descent_slices(p, 3).effective() != equivalence)
      return {false, "point into [" + std::to_string(b) + "]"};
  }
  return {true, std::to_string(t.instances) + " (" + std::to_string(t.effective) + " effective) and " +
                    std::to_string(u.instances) + " (" + std::to_string(u.effective) + " effective) instances"};
}

Outcome main_theorem() {
  SuiteSummary r = run_main_theorem_suite(8001, 500, KanDirection::right, 20000);
  SuiteSummary l = run_main_theorem_suite(8002, 500, KanDirection::left, 20000);
  if (r.counterexamples) return {false, "right: " + r.first_counterexample};
  if (l.counterexamples) return {false, "left: " + l.first_counterexample};
  bool enough = r.verified >= 500 && l.verified >= 500;
  return {enough, "right " + std::to_string(r.verified) + " verified of " + std::to_string(r.instances) + ", left " +
                      std::to_string(l.verified) + " of " + std::to_string(l.instances)};
}

Outcome benabou_roubaud() {
  auto f = finset::basic_indexed_category(4);
  Mor pm = finset::as_mor(finset::make_map(2, 1, {0, 0}));
  auto carriers = f.at(pm.dom)->objects();
  std::vector<Obj> base;
  Fun fp = f.on_mor(pm);
  for (const Obj& v : f.at(pm.cod)->objects())
    if (static_cast<int>(fp.obj(v).size()) <= 4) base.push_back(v);
  BRReport r = benabou_roubaud_compare(f, pm, carriers, base);
  if (!r.ok()) return {false, r.witness};
  return {true, std::to_string(r.descent_objects) + " descent data, " + std::to_string(r.algebras) + " algebras"};
}

Outcome monadicity() {
  SuiteSummary s = run_monadicity_suite(9001, 50, 2000);
  if (s.counterexamples) return {false, s.first_counterexample};
  return {s.verified >= 50, std::to_string(s.verified) + " monadic of " + std::to_string(s.instances)};
}

}  // namespace

int main() {
  criterion(1, "simplex truncation hom counts", 1, delta3_homs);
  criterion(2, "simplex truncation relations", 1, delta3_relations);
  criterion(3, "monoid actions as descent data", 30, monoid_reconstruction);
  criterion(4, "left Kan extensions along 1+1 -> 1", 5, kan_along_codiagonal);
  criterion(5, "Beck-Chevalley for finite sets", 120, bc_basic);
  criterion(6, "effective descent is surjectivity", 300, effective_slices);
  criterion(7, "effectiveness against equivalence", 0, iff_suites);
  criterion(8, "Kan extension creation suites", 600, main_theorem);
  criterion(9, "descent data against algebras", 120, benabou_roubaud);
  criterion(10, "monadicity suite", 0, monadicity);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
