#include "catch2/catch_amalgamated.hpp"

#include "examples.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "stallings/errors.hpp"
#include "stallings/io.hpp"

using namespace stallings;
using namespace stallings::examples;

namespace {
  std::size_t count(std::string const& s, std::string const& needle) {
    std::size_t n = 0;
    for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) {
      ++n;
    }
    return n;
  }

  template <typename F>
  ParseError parse_error(F&& f) {
    try {
      f();
    } catch (ParseError const& e) {
      return e;
    }
    FAIL("expected a parse error");
    return ParseError("", 0);
  }
}  // namespace

TEST_CASE("subgroup file", "[io]") {
  auto f = parse_subgroup_file(
      R"({"alphabet":["a","b","c"],"generators":["c","b a^-1 c^-1","a c a^-1"]})");
  CHECK(f.alphabet.size() == 3);
  CHECK(f.generators.size() == 3);
  CHECK(stallings::stallings(std::span<Word const>(f.generators), f.alphabet)
        == folding_example_expected());

  auto again = parse_subgroup_file(write_subgroup_file(f));
  CHECK(again.generators == f.generators);
  CHECK(write_subgroup_file(again) == write_subgroup_file(f));
}

TEST_CASE("automaton file round trip", "[io]") {
  oracle::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    Alphabet a    = i % 2 ? abc() : ab();
    auto     k    = stallings::stallings(std::span<Word const>(oracle::random_generators(rng, a, 4, 5)), a);
    auto     text = write_automaton_file(k);
    auto     back = parse_automaton_file(text);
    CHECK(back == k);
    CHECK(write_automaton_file(back) == text);
  }
  auto trivial = stallings::stallings(std::span<Word const>(), ab());
  CHECK(parse_automaton_file(write_automaton_file(trivial)) == trivial);
}

TEST_CASE("automaton file layout", "[io]") {
  auto text = write_automaton_file(folding_example_expected());
  CHECK(text.find("\"alphabet\"") < text.find("\"states\""));
  CHECK(text.find("\"states\": 2") < text.find("\"basepoint\": 0"));
  CHECK(count(text, "\n    [") == 4);
}

TEST_CASE("loaded automata are validated and canonicalized", "[io]") {
  // A drawing with the basepoint labelled 2 and a hanging edge.
  auto k = parse_automaton_file(
      R"({"alphabet":["a","b"],"states":3,"basepoint":2,"edges":[[2,"a",0],[0,"b",2],[0,"a",1]]})");
  CHECK(k == from_words(ab(), {"a b"}));

  CHECK_THROWS_AS(
      parse_automaton_file(
          R"({"alphabet":["a"],"states":3,"basepoint":0,"edges":[[0,"a",1],[0,"a",2]]})"),
      InvariantError);
  CHECK_THROWS_AS(
      parse_automaton_file(R"({"alphabet":["a"],"states":2,"basepoint":0,"edges":[]})"),
      InvariantError);
  CHECK_THROWS_AS(
      parse_automaton_file(R"({"alphabet":["a"],"states":1,"basepoint":1,"edges":[]})"),
      InvariantError);
  CHECK_THROWS_AS(
      parse_automaton_file(R"({"alphabet":["a"],"states":1,"basepoint":0,"edges":[[0,"z",0]]})"),
      ParseError);
}

TEST_CASE("load_subgroup accepts both file kinds", "[io]") {
  auto from_gens = load_subgroup(R"({"alphabet":["a","b"],"generators":["a b"]})");
  auto from_aut  = load_subgroup(write_automaton_file(from_gens));
  CHECK(from_gens == from_aut);
}

TEST_CASE("parse errors carry positions", "[io]") {
  auto e = parse_error([] {
    parse_subgroup_file("{\"alphabet\": [\"a\",\"b\"],\n \"generators\": [\"a b\", \"a z\"]}");
  });
  CHECK(e.line() == 2);
  CHECK(e.column() == 27);

  e = parse_error([] { parse_subgroup_file("{\"alphabet\": [\"a\"],\n\"generators\": [\"a\",]}"); });
  CHECK(e.line() == 2);
  CHECK(e.column() > 1);

  CHECK_THROWS_AS(parse_subgroup_file(R"({"alphabet":["a"]})"), ParseError);
  CHECK_THROWS_AS(parse_subgroup_file(R"({"alphabet":"a","generators":[]})"), ParseError);
  CHECK_THROWS_AS(parse_subgroup_file("[]"), ParseError);
}

TEST_CASE("endomorphism file", "[io]") {
  auto e = parse_endomorphism_file(R"({"alphabet":["a","b","c"],"images":{"a":"a b"}})");
  CHECK(to_string(e.image(0), e.alphabet()) == "a b");
  CHECK(to_string(e.image(2), e.alphabet()) == "c");
  CHECK_THROWS_AS(parse_endomorphism_file(R"({"alphabet":["a"],"images":{"b":"a"}})"),
                  ParseError);
}

TEST_CASE("DOT export", "[io]") {
  auto loop = to_dot(from_words(Alphabet{"a"}, {"a"}));
  CHECK(count(loop, " -> ") == 1);
  CHECK(loop.find("0 -> 0 [label=\"a\"]") != std::string::npos);
  CHECK(loop.find("doublecircle") != std::string::npos);

  auto two = to_dot(folding_example_expected());
  CHECK(count(two, " -> ") == 4);

  auto none = to_dot(stallings::stallings(std::span<Word const>(), ab()));
  CHECK(count(none, " -> ") == 0);
  CHECK(count(none, "doublecircle") == 1);
}

TEST_CASE("reports", "[io]") {
  AnalysisOptions opt;
  opt.k_values = {2};
  opt.pi_sets  = {{2, 3}};
  auto r       = analyze(kernel_z2(), opt);
  auto j       = nlohmann::json::parse(report_json(r));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["index"] == 2);
  CHECK(j["normal"] == true);
  CHECK(j["pure"] == false);
  CHECK(j["Bk_bar"][0]["value"] == true);
  CHECK(report_json(r) == report_json(analyze(kernel_z2(), opt)));

  auto text = report_text(r);
  CHECK(text.find("index:           2") != std::string::npos);
  CHECK(text.find("B2 bar:          true") != std::string::npos);

  auto inf = nlohmann::json::parse(report_json(analyze(from_words(ab(), {"a b"}))));
  CHECK(inf["index"] == "infinite");
  CHECK(inf["malnormal"] == true);

  auto m  = generate_monoid(kernel_z2());
  auto mj = nlohmann::json::parse(monoid_json(kernel_z2(), m));
  CHECK(mj["size"] == 2);
  CHECK(monoid_text(kernel_z2(), m).find("elements: 2") != std::string::npos);
}
