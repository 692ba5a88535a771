#include "laxdesc/delta3.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace laxdesc::delta3 {

namespace {

int d_index(Gen g) { return g == Gen::d0 ? 0 : g == Gen::d1 ? 1 : -1; }
int big_d_index(Gen g) { return g == Gen::D0 ? 0 : g == Gen::D1 ? 1 : g == Gen::D2 ? 2 : -1; }
Gen small_d(int i) { return i == 0 ? Gen::d0 : Gen::d1; }
Gen big_d(int i) { return i == 0 ? Gen::D0 : i == 1 ? Gen::D1 : Gen::D2; }

// Rewrites the pair at positions (i, i+1) if it is a redex.
std::optional<Word> rewrite_at(const Word& w, size_t i) {
  Gen a = w[i], b = w[i + 1];
  if (a == Gen::s0 && d_index(b) >= 0) {
    Word r(w.begin(), w.begin() + i);
    r.insert(r.end(), w.begin() + i + 2, w.end());
    return r;
  }
  int t = big_d_index(a), k = d_index(b);
  if (t >= 0 && k >= 0 && t > k) {
    Word r = w;
    r[i] = big_d(k);
    r[i + 1] = small_d(t - 1);
    return r;
  }
  return std::nullopt;
}

}  // namespace

int gen_dom(Gen g) {
  switch (g) {
    case Gen::d0:
    case Gen::d1:
      return 0;
    default:
      return 1;
  }
}

int gen_cod(Gen g) {
  switch (g) {
    case Gen::d0:
    case Gen::d1:
      return 1;
    case Gen::s0:
      return 0;
    default:
      return 2;
  }
}

std::string gen_name(Gen g) {
  static const char* names[] = {"d0", "d1", "s0", "D0", "D1", "D2"};
  return names[static_cast<int>(g)];
}

std::optional<Gen> gen_from_name(const std::string& s) {
  for (Gen g : all_gens())
    if (gen_name(g) == s) return g;
  return std::nullopt;
}

const std::vector<Gen>& all_gens() {
  static const std::vector<Gen> gs = {Gen::d0, Gen::d1, Gen::s0, Gen::D0, Gen::D1, Gen::D2};
  return gs;
}

bool typable(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (gen_dom(w[i]) != gen_cod(w[i + 1])) return false;
  return true;
}

std::optional<int> word_dom(const Word& w) {
  if (w.empty() || !typable(w)) return std::nullopt;
  return gen_dom(w.back());
}

std::optional<int> word_cod(const Word& w) {
  if (w.empty() || !typable(w)) return std::nullopt;
  return gen_cod(w.front());
}

std::vector<Word> one_step(const Word& w) {
  std::vector<Word> r;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (auto x = rewrite_at(w, i)) r.push_back(*x);
  return r;
}

std::pair<int, int> measure(const Word& w) {
  int s = 0;
  for (Gen g : w) s += std::max(0, big_d_index(g));
  return {static_cast<int>(w.size()), s};
}

Morphism normalize(const Word& w, int dom_if_empty) {
  if (!typable(w)) throw CatError("untypable word");
  int dom, cod;
  if (w.empty()) {
    if (dom_if_empty < 0 || dom_if_empty > 2) throw CatError("empty word needs an object");
    dom = cod = dom_if_empty;
  } else {
    dom = gen_dom(w.back());
    cod = gen_cod(w.front());
  }
  Word cur = w;
  while (true) {
    bool changed = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      if (auto x = rewrite_at(cur, i)) {
        cur = *x;
        changed = true;
        break;
      }
    if (!changed) break;
  }
  return Morphism{dom, cod, cur};
}

Morphism parse_word(const std::string& s) {
  if (s == "id1" || s == "id2" || s == "id3") return Morphism{s[2] - '1', s[2] - '1', {}};
  Word w;
  size_t start = 0;
  while (start <= s.size()) {
    size_t dot = s.find('.', start);
    std::string tok = s.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto g = gen_from_name(tok);
    if (!g) throw CatError("unknown generator '" + tok + "'");
    w.push_back(*g);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return normalize(w);
}

std::string show(const Morphism& m) {
  if (m.word.empty()) return "id" + std::to_string(m.dom + 1);
  std::string r;
  for (size_t i = 0; i < m.word.size(); ++i) {
    if (i) r += '.';
    r += gen_name(m.word[i]);
  }
  return r;
}

ConfluenceReport check_confluence(int max_len) {
  ConfluenceReport rep;
  std::vector<Word> frontier = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Gen g : all_gens()) {
        Word x = w;
        x.push_back(g);
        if (typable(x)) next.push_back(x);
      }
    frontier = next;
    for (const Word& w : frontier) {
      ++rep.words_checked;
      std::set<Word> seen = {w};
      std::deque<Word> queue = {w};
      std::set<Word> normal;
      while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        auto succ = one_step(cur);
        if (succ.empty()) normal.insert(cur);
        for (const Word& s : succ) {
          if (!(measure(s) < measure(cur))) {
            rep.terminating = false;
            rep.witness = show(Morphism{0, 0, cur});
          }
          if (seen.insert(s).second) queue.push_back(s);
        }
      }
      if (normal.size() != 1) {
        rep.confluent = false;
        rep.witness = show(Morphism{0, 0, w});
      }
    }
  }
  return rep;
}

int Delta3::id_of(const Morphism& m) const {
  auto it = std::lower_bound(mors.begin(), mors.end(), m);
  if (it == mors.end() || *it != m) throw CatError("not a normal form: " + show(m));
  return static_cast<int>(it - mors.begin());
}

namespace {

Delta3 build() {
  // Closure of identities under postcomposition with generators.
  std::set<Morphism> found;
  std::deque<Morphism> queue;
  for (int x = 0; x < 3; ++x) {
    Morphism idm{x, x, {}};
    found.insert(idm);
    queue.push_back(idm);
  }
  while (!queue.empty()) {
    Morphism m = queue.front();
    queue.pop_front();
    for (Gen g : all_gens()) {
      if (gen_dom(g) != m.cod) continue;
      Word w = {g};
      w.insert(w.end(), m.word.begin(), m.word.end());
      Morphism n = normalize(w, m.dom);
      n.dom = m.dom;
      if (found.insert(n).second) queue.push_back(n);
    }
  }
  Delta3 d;
  d.mors.assign(found.begin(), found.end());
  std::vector<int> dom, cod, ident(3, -1);
  for (size_t i = 0; i < d.mors.size(); ++i) {
    dom.push_back(d.mors[i].dom);
    cod.push_back(d.mors[i].cod);
    if (d.mors[i].word.empty()) ident[d.mors[i].dom] = static_cast<int>(i);
  }
  auto c = std::make_shared<FinCategory>(3, dom, cod, ident);
  c->object_names = {"1", "2", "3"};
  for (const auto& m : d.mors) c->morphism_names.push_back(show(m));
  for (size_t f = 0; f < d.mors.size(); ++f)
    for (size_t g = 0; g < d.mors.size(); ++g) {
      if (d.mors[f].cod != d.mors[g].dom) continue;
      Word w = d.mors[g].word;
      w.insert(w.end(), d.mors[f].word.begin(), d.mors[f].word.end());
      Morphism h = normalize(w, d.mors[f].dom);
      h.dom = d.mors[f].dom;
      h.cod = d.mors[g].cod;
      c->set_comp(static_cast<int>(g), static_cast<int>(f), d.id_of(h));
    }
  c->finalize();
  d.cat = c;
  return d;
}

}  // namespace

const Delta3& delta3() {
  static const Delta3 d = build();
  return d;
}

FinCatPtr as_fincategory() { return delta3().cat; }

FinCatPtr opposite() {
  static const FinCatPtr op = laxdesc::opposite(*delta3().cat);
  return op;
}

}  // namespace laxdesc::delta3
