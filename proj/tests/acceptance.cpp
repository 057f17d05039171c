// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "examples.hpp"
#include "oracle.hpp"
#include "stallings/analysis.hpp"
#include "stallings/errors.hpp"

using namespace stallings;
using namespace stallings::examples;

namespace {

  constexpr std::size_t kCap = 200'000;

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  Word w(std::string_view text, Alphabet const& a) {
    return parse_word(text, a);
  }

  std::string str(std::size_t n) {
    return std::to_string(n);
  }

  // The 200 random subgroups shared by AC6 to AC9: 2 or 3 letters, at most
  // 4 generators of length at most 6.
  std::vector<InverseAutomaton> const& random_sample() {
    static std::vector<InverseAutomaton> sample = [] {
      oracle::Rng                   rng(oracle::OracleConfig{}.random_seed);
      std::vector<InverseAutomaton> out;
      for (int i = 0; i < 200; ++i) {
        Alphabet a = i % 2 ? abc() : ab();
        out.push_back(stallings::stallings(std::span<Word const>(oracle::random_generators(rng, a, 4, 6)), a));
      }
      return out;
    }();
    return sample;
  }

  std::optional<GroupHClass> h_class_of(TransitionMonoid const& m, std::size_t i) {
    for (auto const& h : group_H_classes(m)) {
      if (std::find(h.members.begin(), h.members.end(), i) != h.members.end()) {
        return h;
      }
    }
    return std::nullopt;
  }

  Outcome ac1() {
    auto k = from_words(abc(), folding_example_generators());
    bool ok = k == folding_example_expected() && k.state_count() == 2 && k.edge_count() == 4;
    return {ok, str(k.state_count()) + " states, " + str(k.edge_count()) + " edges"};
  }

  Outcome ac2() {
    auto beta_ab = nielsen(ab(), NielsenKind::beta, 0, 1);
    auto cycle   = apply_endo_to_subgroup(from_words(ab(), {"a"}), beta_ab);
    bool one     = cycle == drawn(ab(), 0, {{0, "a", 1}, {1, "b", 0}});

    auto xi   = EndomorphismSpec(ab(), {w("a b^3", ab()), w("b", ab())});
    auto four = apply_endo_to_subgroup(from_words(ab(), {"a"}), xi);
    bool two  = four == drawn(ab(), 0, {{0, "a", 1}, {1, "b", 2}, {2, "b", 3}, {3, "b", 0}});

    auto six   = apply_endo_to_subgroup(six_state(), nielsen(abc(), NielsenKind::beta, 0, 1));
    bool three = six == six_state_beta();
    return {one && two && three, "beta<a>: " + str(cycle.state_count()) + " states, xi<a>: "
                                     + str(four.state_count()) + " states, beta K: "
                                     + str(six.state_count()) + " states"};
  }

  Outcome ac3() {
    auto kb     = apply_endo_to_subgroup(from_words(ab(), {"a"}), nielsen(ab(), NielsenKind::beta, 0, 1));
    auto ga     = transition_of_word(kb, w("a", ab()));
    auto gb     = transition_of_word(kb, w("b", ab()));
    bool sl     = ga * ga != ga;
    bool com    = ga * gb != gb * ga;
    auto xi     = EndomorphismSpec(ab(), {w("a b^3", ab()), w("b", ab())});
    auto kx     = apply_endo_to_subgroup(from_words(ab(), {"a"}), xi);
    auto tb     = transition_of_word(kx, w("b", ab()));
    bool a3     = power(tb, 4) != power(tb, 3);
    return {sl && com && a3, std::string("Sl fails: ") + (sl ? "yes" : "no") + ", Com fails: "
                                 + (com ? "yes" : "no") + ", A3 fails: " + (a3 ? "yes" : "no")};
  }

  Outcome ac4() {
    auto m   = generate_monoid(seven_state());
    auto c   = m.position(transition_of_word(seven_state(), w("c", abcd())));
    auto mb  = generate_monoid(seven_state_beta());
    auto bbc = mb.position(transition_of_word(seven_state_beta(), w("b^-1 b c", abcd())));
    if (!c || !bbc) {
      return {false, "transition missing from the monoid"};
    }
    auto h  = h_class_of(m, *c);
    auto hb = h_class_of(mb, *bbc);
    if (!h || !hb) {
      return {false, "element not in a group H-class"};
    }
    auto order = [](GroupHClass const& g, std::size_t i) {
      return g.orders[std::find(g.members.begin(), g.members.end(), i) - g.members.begin()];
    };
    std::size_t o  = order(*h, *c);
    std::size_t ob = order(*hb, *bbc);
    // Cyclic: some member has order equal to the class size.
    bool ok = h->members.size() == 6 && o == 6 && hb->members.size() == 3 && ob == 3;
    return {ok, "|H(delta_c)| = " + str(h->members.size()) + " order " + str(o)
                    + ", |H(gamma_b^-1bc)| = " + str(hb->members.size()) + " order " + str(ob)};
  }

  Outcome ac5() {
    oracle::Rng                   rng(101);
    std::vector<InverseAutomaton> subgroups = {
        kernel_z2(), s3_kernel(), from_words(ab(), {"a", "b a b^-2", "b^2 a b^-1", "b^3"}),
        oracle::random_finite_index(rng, abc(), 5), oracle::random_finite_index(rng, abc(), 6)};
    std::size_t runs = 0, passed = 0;
    for (auto const& k : subgroups) {
      auto m = generate_monoid(k);
      for (int i = 0; i < 20; ++i) {
        auto phi = nielsen_sequence(k.alphabet(), oracle::random_nielsen(rng, k.alphabet(), 6));
        auto mk  = generate_monoid(apply_endo_to_subgroup(k, phi));
        ++runs;
        passed += oracle::permutation_isomorphic(m, mk);
      }
    }
    return {passed == runs && runs == 100, str(passed) + "/" + str(runs) + " isomorphic"};
  }

  struct PseudovarietyProfile {
    bool              pure;
    std::vector<bool> bk;
    std::vector<bool> gpi;
    bool              operator==(PseudovarietyProfile const&) const = default;
  };

  PseudovarietyProfile profile(TransitionMonoid const& m) {
    static std::vector<std::vector<unsigned>> const pis = {{2}, {3}, {2, 3}};
    PseudovarietyProfile p{is_pure(m), {}, {}};
    for (std::size_t k : {2, 4, 3, 6}) {
      p.bk.push_back(in_Bk_bar(m, k));
    }
    for (auto const& pi : pis) {
      p.gpi.push_back(in_Gpi_bar(m, pi));
    }
    return p;
  }

  Outcome ac6() {
    oracle::Rng rng(202);
    std::size_t runs = 0, passed = 0, skipped = 0, non_pure = 0;
    for (auto const& k : random_sample()) {
      auto phi = nielsen_sequence(k.alphabet(), oracle::random_nielsen(rng, k.alphabet(), 6));
      try {
        auto before = profile(generate_monoid(k, kCap));
        auto after  = profile(generate_monoid(apply_endo_to_subgroup(k, phi), kCap));
        ++runs;
        passed += before == after;
        non_pure += !before.pure;
      } catch (CapExceeded const&) {
        ++skipped;
      }
    }
    return {passed == runs && runs > 0,
            str(passed) + "/" + str(runs) + " preserved (" + str(non_pure) + " non-pure, "
                + str(skipped) + " over the cap of " + str(kCap) + ")"};
  }

  Outcome ac7() {
    std::size_t runs = 0, agreed = 0, malnormal = 0, skipped = 0;
    for (auto const& k : random_sample()) {
      try {
        bool by_e = malnormal_by_idempotents(k, kCap);
        bool by_p = malnormal_by_product(k);
        ++runs;
        agreed += by_e == by_p;
        malnormal += by_p;
      } catch (CapExceeded const&) {
        ++skipped;
      }
    }
    struct Hand {
      char const* gens[2];
      bool        expected;
    };
    bool hand = true;
    for (auto const& [gens, expected] :
         {Hand{{"a b", nullptr}, true}, Hand{{"a^2", "b"}, false}, Hand{{"a", nullptr}, true}}) {
      std::vector<std::string> g = {gens[0]};
      if (gens[1]) {
        g.push_back(gens[1]);
      }
      auto k = from_words(ab(), g);
      hand   = hand && malnormal_by_idempotents(k) == expected && malnormal_by_product(k) == expected;
    }
    return {agreed == runs && runs > 0 && hand,
            str(agreed) + "/" + str(runs) + " agree (" + str(malnormal) + " malnormal, "
                + str(skipped) + " over the cap), hand examples " + (hand ? "match" : "differ")};
  }

  Outcome ac8() {
    bool        flags = is_cyclonormal(cyclonormal_H()) && !is_cyclonormal(cyclonormal_K());
    std::size_t checked = 0, violations = 0, skipped = 0;
    for (auto const& k : random_sample()) {
      if (k.state_count() <= 2 || k.trivial() || !is_cyclonormal(k)) {
        continue;
      }
      try {
        auto b = cyclonormal_bounds(k, kCap);
        ++checked;
        violations += !(b.satisfied && (b.k == 2 || b.k == 3));
      } catch (CapExceeded const&) {
        ++skipped;
      }
    }
    return {flags && violations == 0 && checked > 0,
            std::string("H cyclonormal, K not: ") + (flags ? "yes" : "no") + ", "
                + str(checked) + " bound checks, " + str(violations) + " violations, "
                + str(skipped) + " over the cap"};
  }

  Outcome ac9() {
    std::vector<InverseAutomaton> sample = random_sample();
    oracle::Rng                   rng(303);
    for (int i = 0; i < 50; ++i) {
      sample.push_back(oracle::random_finite_index(rng, i % 2 ? abc() : ab(), 6));
    }
    for (auto const& k : {kernel_z2(), s3_kernel(), whole_ab(), from_words(ab(), {"a"}),
                          from_words(ab(), {"a^2", "b"}), stallings::stallings(std::span<Word const>(), ab())}) {
      sample.push_back(k);
    }
    std::size_t agreed = 0, normal = 0;
    for (auto const& k : sample) {
      bool by_monoid = is_normal(k);
      bool closure   = oracle::conjugation_closure_check(k);
      bool by_core   = k.trivial() || (k.complete() && oracle::vertex_transitive_check(core_and_tail(k)->core));
      agreed += by_monoid == closure && closure == by_core;
      normal += by_monoid;
    }
    return {agreed == sample.size(),
            str(agreed) + "/" + str(sample.size()) + " agree (" + str(normal) + " normal)"};
  }

  // Substitutes images[x] for each variable x of u.
  Word substitute(Word const& u, std::vector<ReducedWord> const& images) {
    Word out;
    for (Letter l : u.letters()) {
      Word img = images[l.generator].word();
      out      = out * (l.inverse ? invert_word(img) : img);
    }
    return out;
  }

  Outcome ac10() {
    Alphabet xy{"x", "y"};
    struct Case {
      InverseAutomaton k;
      std::string      identity;
      std::size_t      variables;
      bool             expected;
    };
    std::vector<Case> cases = {{kernel_z2(), "x y x^-1 y^-1", 2, true},
                               {kernel_z2(), "x^2", 1, true},
                               {s3_kernel(), "x y x^-1 y^-1", 2, false},
                               {s3_kernel(), "x^2", 1, false},
                               {s3_kernel(), "x^6", 1, true}};
    oracle::Rng rng(404);
    std::size_t consistent = 0;
    bool        expected   = true;
    for (auto const& c : cases) {
      Word u         = w(c.identity, xy);
      bool satisfied = satisfies_group_identities(c.k, std::span(&u, 1), c.variables);
      expected       = expected && satisfied == c.expected;

      // Explicit witnesses first: every pair of reduced words of length <= 2.
      auto short_words = oracle::enumerate_reduced(c.k.alphabet(), 2);
      bool escaped     = false;
      for (auto const& p : short_words) {
        for (auto const& q : short_words) {
          escaped = escaped || !member(c.k, substitute(u, {p, q}));
        }
      }
      std::size_t inside = 0;
      for (int i = 0; i < 50; ++i) {
        std::vector<ReducedWord> images;
        for (int v = 0; v < 3; ++v) {
          images.push_back(oracle::random_reduced_word(rng, c.k.alphabet(), 1 + rng() % 4));
        }
        bool in = member(c.k, substitute(u, images));
        inside += in;
        escaped = escaped || !in;
      }
      consistent += satisfied ? (inside == 50 && !escaped) : escaped;
    }
    return {expected && consistent == cases.size(),
            str(consistent) + "/" + str(cases.size()) + " identity checks consistent"};
  }

  Outcome ac11() {
    oracle::Rng rng(505);
    std::size_t passed = 0;
    for (int i = 0; i < 500; ++i) {
      Alphabet                 a = i % 2 ? abc() : ab();
      std::vector<ReducedWord> gens;
      for (auto const& g : oracle::random_generators(rng, a, 4, 6)) {
        gens.push_back(free_reduce(g));
      }
      auto m = flower(gens, a);
      passed += fold(m) == oracle::naive_fold(m, rng());
    }
    return {passed == 500, str(passed) + "/500 isomorphic"};
  }

  Outcome ac12() {
    oracle::Rng rng(606);
    std::size_t agreed = 0;
    for (int i = 0; i < 500; ++i) {
      Alphabet a    = i % 2 ? abc() : ab();
      auto     gens = oracle::random_generators(rng, a, 3, 5);
      auto     k    = stallings::stallings(std::span<Word const>(gens), a);
      // Half the samples are products of generators, so members occur.
      Word x;
      if (i % 4 < 2) {
        for (int j = 0; j < 3; ++j) {
          Word g = gens[rng() % gens.size()];
          x      = x * (rng() % 2 ? g : invert_word(g));
        }
      } else {
        x = oracle::random_reduced_word(rng, a, rng() % 7).word();
      }
      agreed += member(k, x) == oracle::member_via_regeneration(gens, a, x);
    }

    std::vector<InverseAutomaton> subgroups = {kernel_z2(), s3_kernel(),
                                               from_words(ab(), {"a^3", "b"}),
                                               from_words(ab(), {"a^2", "b^3"})};
    for (int i = 0; i < 20; ++i) {
      subgroups.push_back(stallings::stallings(std::span<Word const>(oracle::random_generators(rng, ab(), 3, 4)), ab()));
    }
    auto                                      xs  = oracle::enumerate_reduced(ab(), 4);
    std::vector<std::vector<unsigned>> const  pis = {{2}, {3}, {2, 3}};
    std::size_t                               contradictions = 0, implications = 0;
    for (auto const& k : subgroups) {
      auto m = generate_monoid(k, kCap);
      for (std::size_t kk : {2, 3, 4, 6}) {
        if (!in_Bk_bar(m, kk)) {
          continue;
        }
        for (auto const& x : xs) {
          for (std::int64_t n = 1; n <= 6; ++n) {
            if (member(k, power(x, n))) {
              ++implications;
              contradictions += !member(k, power(x, std::gcd<std::int64_t>(kk, n)));
            }
          }
        }
      }
      for (auto const& pi : pis) {
        if (!in_Gpi_bar(m, pi)) {
          continue;
        }
        for (std::int64_t n = 1; n <= 6; ++n) {
          bool pi_prime = std::none_of(pi.begin(), pi.end(), [n](unsigned p) { return n % p == 0; });
          if (!pi_prime) {
            continue;
          }
          for (auto const& x : xs) {
            if (member(k, power(x, n))) {
              ++implications;
              contradictions += !member(k, x);
            }
          }
        }
      }
    }
    return {agreed == 500 && contradictions == 0,
            str(agreed) + "/500 membership agree, " + str(contradictions) + " contradictions in "
                + str(implications) + " power checks"};
  }

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<std::pair<char const*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3},   {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}};
  int  failures = 0;
  auto start    = clock::now();
  for (auto const& [name, run] : criteria) {
    auto    t0 = clock::now();
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%-4s %s  %s  [%.2fs]\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
