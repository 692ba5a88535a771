#include "laxdesc/frontend/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>

#include "laxdesc/descent.hpp"
#include "laxdesc/frontend/loader.hpp"
#include "laxdesc/frontend/printer.hpp"
#include "laxdesc/kan.hpp"
#include "laxdesc/laxdescent.hpp"
#include "laxdesc/monadics.hpp"
#include "laxdesc/theorems.hpp"

namespace laxdesc::frontend {

namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::optional<int> bound;
  std::uint64_t seed = 1;
  size_t count = 10;
  size_t max_instances = 0;
  std::string map, along, indexed, precategory, pseudofunctor, functor, of, kan_along;
  std::string direction = "both";
};

json category_json(const FinCategory& c) {
  json objs = json::array(), mors = json::array(), comps = json::array();
  for (int x = 0; x < c.object_count(); ++x) objs.push_back(c.obj_name(x));
  for (int f = 0; f < c.morphism_count(); ++f)
    mors.push_back({{"name", c.mor_name(f)}, {"dom", c.obj_name(c.dom(f))}, {"cod", c.obj_name(c.cod(f))}});
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g : c.out(c.cod(f)))
      if (!c.is_identity(f) && !c.is_identity(g)) comps.push_back({c.mor_name(g), c.mor_name(f), c.mor_name(c.comp(g, f))});
  return {{"objects", objs}, {"morphisms", mors}, {"composites", comps}};
}

json functor_json(const FinFunctor& f) {
  json objs = json::object(), mors = json::object();
  for (int x = 0; x < f.src->object_count(); ++x) objs[f.src->obj_name(x)] = f.tgt->obj_name(f.obj[x]);
  for (int m = 0; m < f.src->morphism_count(); ++m) mors[f.src->mor_name(m)] = f.tgt->mor_name(f.mor[m]);
  return {{"objects", objs}, {"morphisms", mors}};
}

json nat_json(const NatTrans& t) {
  json c = json::object();
  for (int x = 0; x < t.src.src->object_count(); ++x) c[t.src.src->obj_name(x)] = t.src.tgt->mor_name(t.comp[x]);
  return c;
}

json map_json(const finset::FinSetMap& p) {
  return {{"dom", p.dom}, {"cod", p.cod}, {"img", p.img}, {"surjective", finset::is_surjective(p)}};
}

json equivalence_json(const EquivalenceReport& r) {
  return {{"faithful", r.faithful}, {"full", r.full}, {"essentially_surjective", r.essentially_surjective}};
}

json bc_json(const BCReport& r, const CatPtr& fiber) {
  json j = {{"holds", r.holds}, {"adjoints_available", r.adjoints_available}, {"checked", r.checked}};
  j["witness"] = r.witness ? json(fiber->show(*r.witness)) : json(nullptr);
  j["detail"] = r.detail;
  return j;
}

json monadicity_json(const MonadicityReport& r) {
  return {{"monadic", r.monadic()},
          {"has_left_adjoint", r.has_left_adjoint},
          {"comparison_equivalence", r.comparison_equivalence},
          {"conservative", r.conservative},
          {"split_pairs_ok", r.split_pairs_ok},
          {"creates_split", r.creates_split},
          {"split_pairs", r.split_pairs},
          {"oracles_agree", r.agree()},
          {"witness", r.witness}};
}

json summary_json(const SuiteSummary& s) {
  return {{"instances", s.instances},
          {"vacuous", s.vacuous},
          {"verified", s.verified},
          {"counterexamples", s.counterexamples},
          {"first_counterexample", s.first_counterexample}};
}

class Resolver {
 public:
  explicit Resolver(const Options& o) : o_(o) {}

  const Environment& file_env(const std::string& path) {
    auto it = files_.find(path);
    if (it == files_.end()) it = files_.emplace(path, load_file(path)).first;
    return it->second;
  }

  // "path.lcat", "path.lcat:name", or a name declared in --file.
  std::pair<const Environment*, std::string> resolve(const std::string& ref, const std::string& kind) {
    const Environment* env = nullptr;
    std::string name;
    if (auto pos = ref.find(".lcat"); pos != std::string::npos) {
      env = &file_env(ref.substr(0, pos + 5));
      if (pos + 5 < ref.size()) {
        if (ref[pos + 5] != ':') throw InputError("malformed reference " + ref);
        name = ref.substr(pos + 6);
      }
    } else {
      if (o_.file.empty()) throw InputError(kind + " " + ref + " needs --file or a path.lcat reference");
      env = &file_env(o_.file);
      name = ref;
    }
    if (name.empty()) {
      std::vector<std::string> found;
      for (const auto& d : env->doc.decls)
        if (d.kind() == kind) found.push_back(d.name.text);
      if (found.size() != 1) throw InputError(ref + " declares " + std::to_string(found.size()) + " " + kind + "s; name one");
      return {env, found[0]};
    }
    const Decl* d = env->doc.find(name);
    if (!d) throw InputError("no declaration " + name);
    if (d->kind() != kind) throw InputError(name + " is a " + d->kind() + ", not a " + kind);
    return {env, name};
  }

  finset::FinSetMap map(const std::string& ref) {
    auto [env, n] = resolve(ref, "map");
    return env->maps.at(n);
  }
  FinFunctor functor(const std::string& ref) {
    auto [env, n] = resolve(ref, "functor");
    return env->functors.at(n);
  }
  Precategory precategory(const std::string& ref) {
    auto [env, n] = resolve(ref, "precategory");
    return env->precategories.at(n);
  }
  TruncCosimp pseudofunctor(const std::string& ref) {
    auto [env, n] = resolve(ref, "pseudofunctor");
    return env->pseudofunctors.at(n);
  }

  IndexedSpec indexed(const std::string& ref) {
    if (ref.empty()) throw InputError("--indexed is required");
    if (ref == "slice" || ref == "diagrams") {
      if (!o_.bound) throw InputError("--indexed " + ref + " needs an explicit --bound");
      if (*o_.bound < 1) throw InputError("--bound must be positive");
      return IndexedSpec{ref, *o_.bound, nullptr};
    }
    auto [env, n] = resolve(ref, "indexed");
    IndexedSpec s = env->indexed.at(n);
    if (o_.bound && *o_.bound != s.bound)
      throw InputError("--bound " + std::to_string(*o_.bound) + " conflicts with the declared bound " + std::to_string(s.bound));
    return s;
  }

  // The base morphism named by --map (finite-set bases) or --functor (diagrams).
  Mor base_morphism(const IndexedSpec& s, const std::string& map_ref) {
    if (s.kind == "diagrams") {
      if (o_.functor.empty()) throw InputError("diagrams are indexed over functors; pass --functor");
      return encode_functor(functor(o_.functor));
    }
    if (map_ref.empty()) throw InputError("--map is required");
    finset::FinSetMap p = map(map_ref);
    if (s.kind == "power" && std::max(p.dom, p.cod) > s.bound)
      throw InputError("map exceeds the bound " + std::to_string(s.bound));
    return finset::as_mor(p);
  }

 private:
  const Options& o_;
  std::map<std::string, Environment> files_;
};

// Objects v of F(cod p) whose reindexing lands among the carriers.
std::vector<Obj> restricted_base(const IndexedCategory& f, const Mor& p, const std::vector<Obj>& carriers) {
  std::set<Obj> listed(carriers.begin(), carriers.end());
  Fun fp = f.on_mor(p);
  std::vector<Obj> out;
  for (const Obj& v : f.at(p.cod)->objects())
    if (listed.count(fp.obj(v))) out.push_back(v);
  return out;
}

int cmd_build(Resolver& r, const Options& o, json& rep) {
  const Environment& env = r.file_env(o.file);
  json decls = json::array();
  for (const auto& d : env.doc.decls) {
    const std::string& n = d.name.text;
    json e = {{"name", n}, {"kind", d.kind()}};
    if (auto it = env.categories.find(n); it != env.categories.end()) e["category"] = category_json(*it->second);
    if (auto it = env.maps.find(n); it != env.maps.end()) e["map"] = map_json(it->second);
    if (auto it = env.monoids.find(n); it != env.monoids.end()) {
      e["elements"] = it->second.names;
      e["table"] = it->second.table;
    }
    if (auto it = env.precategories.find(n); it != env.precategories.end())
      e["objects"] = {it->second.objs[0].at(0), it->second.objs[1].at(0), it->second.objs[2].at(0)};
    if (auto it = env.indexed.find(n); it != env.indexed.end()) {
      e["indexed"] = it->second.kind;
      e["bound"] = it->second.bound;
    }
    if (auto it = env.pseudofunctors.find(n); it != env.pseudofunctors.end()) {
      json sizes = json::array();
      for (const auto& c : it->second.cats) sizes.push_back(c->objects().size());
      e["objects_per_level"] = sizes;
    }
    if (auto it = env.functors.find(n); it != env.functors.end()) e["functor"] = functor_json(it->second);
    if (auto it = env.nattrans.find(n); it != env.nattrans.end()) e["components"] = nat_json(it->second);
    if (auto it = env.adjunctions.find(n); it != env.adjunctions.end()) {
      e["unit"] = nat_json(it->second.unit);
      e["counit"] = nat_json(it->second.counit);
    }
    decls.push_back(e);
  }
  rep["valid"] = true;
  rep["declarations"] = decls;
  rep["canonical"] = print(env.doc);
  return 0;
}

int cmd_eqp(Resolver& r, const Options& o, json& rep) {
  if (o.map.empty()) throw InputError("--map is required");
  finset::FinSetMap p = r.map(o.map);
  Precategory e = eq_groupoid(p);
  LawReport v = validate_precategory(e);
  rep["map"] = map_json(p);
  rep["objects"] = {e.objs[0].at(0), e.objs[1].at(0), e.objs[2].at(0)};
  json gens = json::object();
  for (auto g : delta3::all_gens()) gens[delta3::gen_name(g)] = finset::as_map(e.gens.at(g)).img;
  rep["generators"] = gens;
  rep["valid"] = v.ok();
  rep["violations"] = v.violations;
  return v.ok() ? 0 : 1;
}

int cmd_actions(Resolver& r, const Options& o, json& rep) {
  TruncCosimp a;
  if (!o.pseudofunctor.empty()) {
    a = r.pseudofunctor(o.pseudofunctor);
  } else {
    if (o.precategory.empty()) throw InputError("pass --pseudofunctor, or --indexed with --precategory");
    IndexedSpec s = r.indexed(o.indexed);
    if (s.kind == "diagrams") throw InputError("diagrams are indexed over categories; precategories live in finite sets");
    Precategory p = r.precategory(o.precategory);
    if (s.kind == "power")
      for (const Obj& x : p.objs)
        if (x.at(0) > s.bound) throw InputError("precategory exceeds the bound " + std::to_string(s.bound));
    a = compose_indexed_with_precategory(s.make(), p);
  }
  auto carriers = a.cats[0]->objects();
  LaxDescent ld = build_lax_descent(a, carriers);
  std::map<Obj, int> per;
  for (const Obj& x : ld.objects) ++per[decode_structured(x).carrier];
  json by = json::array();
  for (const Obj& w : carriers) by.push_back({{"carrier", a.cats[0]->show(w)}, {"data", per[w]}});
  rep["carriers"] = carriers.size();
  rep["descent_objects"] = ld.objects.size();
  rep["by_carrier"] = by;
  return 0;
}

int cmd_factor(Resolver& r, const Options& o, json& rep) {
  IndexedSpec s = r.indexed(o.indexed);
  IndexedCategory f = s.make();
  Mor p = r.base_morphism(s, o.map);
  auto carriers = f.at(p.dom)->objects();
  auto base = restricted_base(f, p, carriers);
  DescentFactorization df = descent_factorization(f, p, carriers, base);
  rep["datum_ok"] = df.datum_ok;
  rep["composite_ok"] = df.composite_check;
  rep["descent_objects"] = df.descent.objects.size();
  rep["base_objects"] = base.size();
  json kp = json::array();
  if (df.kp)
    for (const Obj& v : base) kp.push_back({{"object", f.at(p.cod)->show(v)}, {"image", df.descent.cat->show(df.kp->obj(v))}});
  rep["kp"] = kp;
  rep["witness"] = df.witness;
  return df.datum_ok && df.composite_check ? 0 : 1;
}

int cmd_effective(Resolver& r, const Options& o, json& rep) {
  IndexedSpec s = r.indexed(o.indexed);
  EffectivenessReport e;
  if (s.kind == "slice") {
    Mor p = r.base_morphism(s, o.map);
    e = is_effective_descent_slices(finset::as_map(p), s.bound);
  } else {
    IndexedCategory f = s.make();
    Mor p = r.base_morphism(s, o.map);
    auto carriers = f.at(p.dom)->objects();
    e = is_effective_descent(f, p, carriers, restricted_base(f, p, carriers));
  }
  rep["effective"] = e.effective();
  rep["datum_ok"] = e.datum_ok;
  rep["composite_ok"] = e.composite_ok;
  rep["comparison"] = equivalence_json(e.equivalence);
  rep["descent_objects"] = e.descent_objects;
  rep["witness"] = e.equivalence.witness;
  return e.effective() ? 0 : 1;
}

int cmd_monadic(Resolver& r, const Options& o, json& rep) {
  MonadicityReport m;
  if (o.indexed.empty()) {
    if (o.functor.empty()) throw InputError("pass --functor, or --indexed with --map");
    m = is_monadic(r.functor(o.functor));
  } else {
    IndexedSpec s = r.indexed(o.indexed);
    IndexedCategory f = s.make();
    Mor p = r.base_morphism(s, o.map);
    auto adj = f.left_adjoint(p);
    if (!adj) {
      m.witness = "reindexing has no left adjoint";
    } else {
      auto carriers = f.at(p.dom)->objects();
      m = is_monadic(f.on_mor(p), *adj, restricted_base(f, p, carriers), carriers);
    }
  }
  rep.update(monadicity_json(m));
  return m.monadic() ? 0 : 1;
}

int cmd_bc(Resolver& r, const Options& o, json& rep) {
  IndexedSpec s = r.indexed(o.indexed);
  IndexedCategory f = s.make();
  Mor u = r.base_morphism(s, o.map);
  BCReport b;
  CatPtr fiber;
  if (o.along.empty()) {
    fiber = f.at(u.dom);
    b = beck_chevalley(f, u, fiber->objects());
    rep["square"] = "kernel pair";
  } else {
    Mor v = r.base_morphism(s, o.along);
    if (v.cod != u.cod) throw InputError("--map and --along must share a codomain");
    fiber = f.at(v.dom);
    b = beck_chevalley(f, u, v, fiber->objects());
    rep["square"] = "pullback";
  }
  rep.update(bc_json(b, fiber));
  return b.holds ? 0 : 1;
}

int cmd_br(Resolver& r, const Options& o, json& rep) {
  IndexedSpec s = r.indexed(o.indexed);
  IndexedCategory f = s.make();
  Mor p = r.base_morphism(s, o.map);
  auto carriers = f.at(p.dom)->objects();
  BRReport b = benabou_roubaud_compare(f, p, carriers, restricted_base(f, p, carriers));
  rep["ok"] = b.ok();
  rep["bc"] = bc_json(b.bc, f.at(p.dom));
  rep["descent_objects"] = b.descent_objects;
  rep["algebras"] = b.algebras;
  rep["found"] = b.found;
  rep["forget_commutes"] = b.forget_commutes;
  rep["comparison_commutes"] = b.comparison_commutes;
  rep["witness"] = b.witness;
  return b.ok() ? 0 : 1;
}

int cmd_kan(Resolver& r, const Options& o, json& rep, KanDirection dir) {
  if (o.of.empty() || o.kan_along.empty()) throw InputError("--of and --along are required");
  FinFunctor j = r.functor(o.of);
  FinFunctor h = r.functor(o.kan_along);
  if (j.src != h.src) throw InputError("--of and --along must share a domain");
  KanExtension ke = dir == KanDirection::right ? right_kan(j, h) : left_kan(j, h);
  rep["direction"] = dir == KanDirection::right ? "ran" : "lan";
  rep["exists"] = ke.exists;
  json witnesses = json::array();
  if (!ke.exists) {
    if (ke.failure_witness)
      witnesses.push_back("no " + std::string(dir == KanDirection::right ? "limit" : "colimit") + " at " +
                          h.tgt->obj_name(*ke.failure_witness));
    rep["value"] = nullptr;
    rep["universal"] = nullptr;
  } else {
    rep["value"] = functor_json(ke.value);
    rep["universal"] = nat_json(ke.universal);
  }
  rep["witnesses"] = witnesses;
  return ke.exists ? 0 : 1;
}

int cmd_verify(const Options& o, json& rep, const std::string& which) {
  size_t max = o.max_instances ? o.max_instances : 40 * std::max<size_t>(o.count, 1);
  rep["seed"] = o.seed;
  rep["count"] = o.count;
  if (which == "main") {
    if (o.direction != "right" && o.direction != "left" && o.direction != "both")
      throw InputError("--direction must be right, left or both");
    SuiteSummary total;
    for (auto [name, dir] : {std::pair{"right", KanDirection::right}, std::pair{"left", KanDirection::left}}) {
      if (o.direction != "both" && o.direction != name) continue;
      SuiteSummary s = run_main_theorem_suite(o.seed, o.count, dir, max);
      rep[name] = summary_json(s);
      total.instances += s.instances;
      total.vacuous += s.vacuous;
      total.verified += s.verified;
      total.counterexamples += s.counterexamples;
      if (total.first_counterexample.empty()) total.first_counterexample = s.first_counterexample;
    }
    rep.update(summary_json(total));
    return total.counterexamples == 0 ? 0 : 1;
  }
  if (which == "monadic") {
    SuiteSummary s = run_monadicity_suite(o.seed, o.count, max);
    rep.update(summary_json(s));
    return s.counterexamples == 0 ? 0 : 1;
  }
  if (which == "terminal" || which == "arrow") {
    IffSummary s = which == "terminal" ? run_terminal_domain_suite(o.seed, o.count) : run_arrow_base_suite(o.seed, o.count);
    rep["instances"] = s.instances;
    rep["vacuous"] = 0;
    rep["verified"] = s.instances - s.counterexamples;
    rep["counterexamples"] = s.counterexamples;
    rep["effective"] = s.effective;
    rep["first_counterexample"] = s.first_counterexample;
    return s.counterexamples == 0 ? 0 : 1;
  }
  // absolute
  Rng rng(o.seed);
  SuiteSummary s;
  for (size_t i = 0; i < o.count; ++i) {
    RandomCosimp rc = random_cosimp(rng);
    AbsoluteReport a = verify_absolute_creation(tabulate_descent(rc.a));
    ++s.instances;
    if (a.split_pairs == 0)
      ++s.vacuous;
    else if (a.ok())
      ++s.verified;
    else if (++s.counterexamples == 1)
      s.first_counterexample = rc.description + ": " + a.witness;
  }
  rep.update(summary_json(s));
  return s.counterexamples == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lax descent computations on finite categories", "laxdesc"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Resolver&, json&)> action;
  std::string command;

  auto file_opt = [&](CLI::App* s) { s->add_option("--file", o.file, "document resolving bare names"); };
  auto bound_opt = [&](CLI::App* s) { s->add_option("--bound", o.bound, "fiber size bound"); };
  auto indexed_opts = [&](CLI::App* s) {
    file_opt(s);
    bound_opt(s);
    s->add_option("--indexed", o.indexed, "slice, diagrams, or a declared indexed category")->required();
    s->add_option("--map", o.map, "base map reference");
    s->add_option("--functor", o.functor, "base functor reference (diagrams)");
  };
  auto bind = [&](CLI::App* s, std::string name, std::function<int(Resolver&, json&)> f) {
    s->callback([&, name, f] {
      command = name;
      action = f;
    });
  };

  auto* build = app.add_subcommand("build", "load and validate a document");
  build->add_option("file", o.file, "document")->required();
  bind(build, "build", [&](Resolver& r, json& j) { return cmd_build(r, o, j); });

  auto* eqp = app.add_subcommand("eqp", "equivalence relation of a finite-set map");
  file_opt(eqp);
  eqp->add_option("--map", o.map, "map reference")->required();
  bind(eqp, "eqp", [&](Resolver& r, json& j) { return cmd_eqp(r, o, j); });

  auto* actions = app.add_subcommand("actions", "lax descent category of a pseudofunctor");
  file_opt(actions);
  bound_opt(actions);
  actions->add_option("--pseudofunctor", o.pseudofunctor, "pseudofunctor reference");
  actions->add_option("--indexed", o.indexed, "slice or a declared indexed category");
  actions->add_option("--precategory", o.precategory, "precategory reference");
  bind(actions, "actions", [&](Resolver& r, json& j) { return cmd_actions(r, o, j); });

  auto* factor = app.add_subcommand("factor", "descent factorization of a reindexing functor");
  indexed_opts(factor);
  bind(factor, "factor", [&](Resolver& r, json& j) { return cmd_factor(r, o, j); });

  auto* effective = app.add_subcommand("effective", "effective descent test");
  indexed_opts(effective);
  bind(effective, "effective", [&](Resolver& r, json& j) { return cmd_effective(r, o, j); });

  auto* monadic = app.add_subcommand("monadic", "monadicity of a functor or a reindexing functor");
  file_opt(monadic);
  bound_opt(monadic);
  monadic->add_option("--functor", o.functor, "functor reference");
  monadic->add_option("--indexed", o.indexed, "slice or a declared indexed category");
  monadic->add_option("--map", o.map, "base map reference");
  bind(monadic, "monadic", [&](Resolver& r, json& j) { return cmd_monadic(r, o, j); });

  auto* check = app.add_subcommand("check", "Beck-Chevalley and descent against algebras");
  check->require_subcommand(1);
  auto* bc = check->add_subcommand("bc", "Beck-Chevalley condition");
  indexed_opts(bc);
  bc->add_option("--along", o.along, "second leg of the square; the kernel pair when absent");
  bind(bc, "check bc", [&](Resolver& r, json& j) { return cmd_bc(r, o, j); });
  auto* br = check->add_subcommand("br", "descent data against algebras of the induced monad");
  indexed_opts(br);
  bind(br, "check br", [&](Resolver& r, json& j) { return cmd_br(r, o, j); });

  auto* kan = app.add_subcommand("kan", "pointwise Kan extensions");
  kan->require_subcommand(1);
  for (auto [name, dir] : {std::pair{"ran", KanDirection::right}, std::pair{"lan", KanDirection::left}}) {
    auto* s = kan->add_subcommand(name, name == std::string("ran") ? "right Kan extension" : "left Kan extension");
    file_opt(s);
    s->add_option("--of", o.of, "functor to extend")->required();
    s->add_option("--along", o.kan_along, "functor to extend along")->required();
    bind(s, std::string("kan ") + name, [&, dir](Resolver& r, json& j) { return cmd_kan(r, o, j, dir); });
  }

  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  verify->require_subcommand(1);
  for (std::string name : {"main", "monadic", "terminal", "arrow", "absolute"}) {
    auto* s = verify->add_subcommand(name, "suite " + name);
    s->add_option("--seed", o.seed, "random seed");
    s->add_option("--count", o.count, "target number of non-vacuous instances");
    s->add_option("--max", o.max_instances, "cap on drawn instances");
    if (name == "main") s->add_option("--direction", o.direction, "right, left or both");
    bind(s, "verify " + name, [&, name](Resolver&, json& j) { return cmd_verify(o, j, name); });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "laxdesc: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  json rep = {{"schema", "laxdesc/1"}, {"command", command}};
  int code = 0;
  try {
    Resolver resolver(o);
    code = action(resolver, rep);
  } catch (const std::exception& e) {
    err << "laxdesc: " << e.what() << "\n";
    return 2;
  }
  out << rep.dump(2) << "\n";
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace laxdesc::frontend
