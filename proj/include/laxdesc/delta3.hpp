#pragma once

// The category generated by d0, d1 : 1 -> 2, s0 : 2 -> 1 and D0, D1, D2 : 2 -> 3,
// presented by a rewriting system on words. Objects 1, 2, 3 are indexed 0, 1, 2.
// A word lists generators left to right as written, so D1.d0 is D1 after d0.

#include <optional>
#include <string>
#include <vector>

#include "laxdesc/fincat.hpp"

namespace laxdesc::delta3 {

enum class Gen { d0, d1, s0, D0, D1, D2 };
using Word = std::vector<Gen>;

int gen_dom(Gen g);
int gen_cod(Gen g);
std::string gen_name(Gen g);
std::optional<Gen> gen_from_name(const std::string& s);
const std::vector<Gen>& all_gens();

struct Morphism {
  int dom = 0;
  int cod = 0;
  Word word;  // normal form
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Domain of a typable word, throws CatError otherwise. The empty word needs dom.
std::optional<int> word_dom(const Word& w);
std::optional<int> word_cod(const Word& w);
bool typable(const Word& w);

// Every word obtained by one rewrite at any position.
std::vector<Word> one_step(const Word& w);
// (length, sum of D superscripts); strictly decreases under every rewrite.
std::pair<int, int> measure(const Word& w);

Morphism normalize(const Word& w, int dom_if_empty = -1);
Morphism parse_word(const std::string& s);  // "D1.d0", "id1", "id2", "id3"
std::string show(const Morphism& m);

struct ConfluenceReport {
  long words_checked = 0;
  bool confluent = true;
  bool terminating = true;
  std::string witness;
};
// Explores the full rewrite graph of every typable word up to max_len.
ConfluenceReport check_confluence(int max_len);

// The explicit finite category; morphism ids follow the sorted normal forms.
struct Delta3 {
  FinCatPtr cat;
  std::vector<Morphism> mors;
  int id_of(const Morphism& m) const;
  int id_of(const std::string& word) const { return id_of(parse_word(word)); }
  int gen(Gen g) const { return id_of(Morphism{gen_dom(g), gen_cod(g), {g}}); }
};
const Delta3& delta3();
FinCatPtr as_fincategory();
FinCatPtr opposite();

}  // namespace laxdesc::delta3
