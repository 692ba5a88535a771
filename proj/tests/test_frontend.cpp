#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "laxdesc/frontend/cli.hpp"
#include "laxdesc/frontend/lexer.hpp"
#include "laxdesc/frontend/loader.hpp"
#include "laxdesc/frontend/parser.hpp"
#include "laxdesc/frontend/printer.hpp"

using namespace laxdesc;
using namespace laxdesc::frontend;

namespace {

const std::string data_dir = LAXDESC_DATA_DIR;
const std::vector<std::string> data_files = {"p_surjective.lcat", "p_injective.lcat", "monoids.lcat",
                                             "categories.lcat",   "kan.lcat",         "nerve.lcat"};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SyntaxError syntax_error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("expected a syntax error");
  throw;
}

LoadError load_error_of(const std::string& text) {
  try {
    load_text(text);
  } catch (const LoadError& e) {
    return e;
  }
  FAIL("expected a load error");
  throw;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return data_dir + "/" + f; }

}  // namespace

TEST_CASE("the lexer", "[frontend]") {
  auto toks = lex("category C' { # comment\n hom(a, b): f_1; } -> => -| 12");
  REQUIRE(toks.front().kind == Tok::ident);
  REQUIRE(toks[1].text == "C'");
  REQUIRE(toks[3].span.line == 2);
  REQUIRE(toks[3].span.col == 2);
  REQUIRE(toks.back().kind == Tok::end);
  REQUIRE(toks[toks.size() - 2].kind == Tok::nat);
  REQUIRE_THROWS_AS(lex("category C { $ }"), SyntaxError);
  REQUIRE_THROWS_AS(lex("map p : [1234567890] -> [1] = [0]"), SyntaxError);
}

TEST_CASE("bundled data files parse, load and round-trip", "[frontend]") {
  for (const auto& f : data_files) {
    INFO(f);
    std::string text = read_file(data(f));
    REQUIRE_FALSE(text.empty());
    Document doc = parse(text);
    REQUIRE_FALSE(doc.decls.empty());
    REQUIRE(parse(print(doc)) == doc);
    REQUIRE(print(parse(print(doc))) == print(doc));
    REQUIRE_NOTHROW(load(doc));
  }
}

TEST_CASE("printing every declaration kind round-trips", "[frontend]") {
  const std::string text = R"(
category C { objects: a, b, c; hom(a, b): f; hom(b, c): g; hom(a, c): h; compose: g . f = h; }
map p : [3] -> [2] = [0, 1, 1]
map e : [0] -> [2] = []
monoid M { 1, x, 2; x . x = 2, x . 2 = 2, 2 . x = 2, 2 . 2 = 2 }
precategory S = sigma(M)
precategory N = nerve(C)
precategory D = discrete(3)
precategory E = eq(p)
indexed Set = slice(bound = 3)
indexed Dg = diagrams(bound = 2)
indexed Pw = power(C, bound = 2)
pseudofunctor A = Set . S
pseudofunctor K = constant(C)
functor J : C -> C { a -> a; b -> a; c -> a; f -> id_a; g -> id_a; h -> id_a; }
nattrans t : J => J { a: id_a; b: id_a; c: id_a; }
adjunction adj : J -| J
)";
  Document doc = parse(text);
  REQUIRE(doc.decls.size() == 16);
  REQUIRE(parse(print(doc)) == doc);
  REQUIRE(doc.find("Pw")->kind() == "indexed");
  REQUIRE(doc.find("missing") == nullptr);
}

TEST_CASE("syntax errors report position and expectations", "[frontend]") {
  SECTION("missing operand in a composite") {
    auto e = syntax_error_of("category C { objects: a, b; hom(a, b): f, g;\n  compose: f . = g; }");
    REQUIRE(e.span.line == 2);
    REQUIRE(e.span.col == 16);
    REQUIRE(e.expected == std::vector<std::string>{"identifier"});
    REQUIRE(std::string(e.what()).starts_with("2:16: unexpected '='"));
  }
  SECTION("trailing comma") {
    auto e = syntax_error_of("category C { objects: a, b,; }");
    REQUIRE(e.span.col == 28);
    REQUIRE(e.found == "';'");
  }
  SECTION("trailing comma in a map") {
    auto e = syntax_error_of("map p : [2] -> [1] = [0, 0,]");
    REQUIRE(e.span.col == 28);
  }
  SECTION("unknown declaration keyword") {
    auto e = syntax_error_of("\n\nfunctr F : A -> B {}");
    REQUIRE(e.span.line == 3);
    REQUIRE(e.span.col == 1);
    REQUIRE(e.expected.size() > 1);
  }
  SECTION("unterminated block") {
    auto e = syntax_error_of("monoid M { 1, e; e . e = e");
    REQUIRE(e.found == "end of input");
  }
}

TEST_CASE("semantic errors carry spans", "[frontend]") {
  SECTION("unknown object") {
    auto e = load_error_of("category C { objects: a; hom(a, c): f; }");
    REQUIRE(e.span.line == 1);
    REQUIRE(e.span.col == 33);
    REQUIRE(std::string(e.what()).find("unknown object c") != std::string::npos);
  }
  SECTION("missing composite") {
    auto e = load_error_of("category C { objects: a, b, c; hom(a, b): f; hom(b, c): g; }");
    REQUIRE(std::string(e.what()).find("missing composite g . f") != std::string::npos);
  }
  SECTION("non-associative monoid") {
    auto e = load_error_of("monoid M { 1, x, y; x . x = y, x . y = x, y . x = x, y . y = x }");
    REQUIRE(e.span.line == 1);
  }
  SECTION("missing product") {
    auto e = load_error_of("monoid M { 1, e }");
    REQUIRE(std::string(e.what()).find("missing product e . e") != std::string::npos);
  }
  SECTION("map out of range") {
    REQUIRE_THROWS_AS(load_text("map p : [2] -> [1] = [0, 1]"), LoadError);
    REQUIRE_THROWS_AS(load_text("map p : [2] -> [1] = [0]"), LoadError);
  }
  SECTION("functor laws") {
    auto e = load_error_of(
        "category C { objects: a, b; hom(a, b): f; }\n"
        "functor F : C -> C { a -> b; b -> a; f -> f; }");
    REQUIRE(e.span.line == 2);
  }
  SECTION("duplicate names") {
    REQUIRE_THROWS_AS(load_text("map p : [1] -> [1] = [0]\nmap p : [1] -> [1] = [0]"), LoadError);
  }
  SECTION("unknown reference") {
    auto e = load_error_of("precategory S = sigma(M)");
    REQUIRE(e.span.col == 23);
  }
}

TEST_CASE("loaded values", "[frontend]") {
  Environment env = load_file(data("monoids.lcat"));
  const Monoid& m = env.monoids.at("M2");
  REQUIRE(m.size == 2);
  REQUIRE(m.table == std::vector<int>{0, 1, 1, 1});
  REQUIRE(env.monoids.at("Z2").table == std::vector<int>{0, 1, 1, 0});
  REQUIRE(validate_trunc_cosimp(env.pseudofunctors.at("AM2")).ok());
  Environment cats = load_file(data("categories.lcat"));
  REQUIRE(cats.adjunctions.count("terminal") == 1);
  REQUIRE_THROWS_AS(load_file(data("no_such_file.lcat")), std::runtime_error);
}

TEST_CASE("CLI reports", "[frontend]") {
  SECTION("effective descent") {
    auto yes = run_cli({"effective", "--indexed", "slice", "--bound", "3", "--map", data("p_surjective.lcat")});
    REQUIRE(yes.code == 0);
    auto j = nlohmann::json::parse(yes.out);
    REQUIRE(j["schema"] == "laxdesc/1");
    REQUIRE(j["command"] == "effective");
    auto no = run_cli({"effective", "--indexed", "slice", "--bound", "3", "--map", data("p_injective.lcat")});
    REQUIRE(no.code == 1);
    REQUIRE_NOTHROW(nlohmann::json::parse(no.out));
  }
  SECTION("descent data count") {
    auto r = run_cli({"actions", "--pseudofunctor", data("monoids.lcat") + ":AM2"});
    REQUIRE(r.code == 0);
    REQUIRE_NOTHROW(nlohmann::json::parse(r.out));
  }
  SECTION("Kan extensions") {
    auto r = run_cli({"kan", "ran", "--file", data("kan.lcat"), "--of", "J", "--along", "H"});
    REQUIRE(r.code == 0);
    REQUIRE(nlohmann::json::parse(r.out)["exists"] == true);
  }
  SECTION("input errors") {
    REQUIRE(run_cli({"effective", "--indexed", "slice", "--bound", "3", "--map", data("no_such_file.lcat")}).code == 2);
    auto bad = run_cli({"effective", "--frobnicate"});
    REQUIRE(bad.code == 2);
    REQUIRE_FALSE(bad.err.empty());
    REQUIRE(run_cli({}).code == 2);
    REQUIRE(run_cli({"--help"}).code == 0);
  }
  SECTION("build") {
    for (const auto& f : data_files) {
      auto r = run_cli({"build", data(f)});
      INFO(f << ": " << r.err);
      REQUIRE(r.code == 0);
      REQUIRE(nlohmann::json::parse(r.out)["valid"] == true);
    }
  }
}

TEST_CASE("the installed binary", "[frontend]") {
  std::string cmd = std::string(LAXDESC_CLI) + " check bc --indexed slice --bound 3 --map " + data("p_surjective.lcat") + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  REQUIRE(WEXITSTATUS(status) == 0);
  REQUIRE(nlohmann::json::parse(out)["schema"] == "laxdesc/1");
}
