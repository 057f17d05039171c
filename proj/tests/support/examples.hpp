// Worked examples shared by the unit and acceptance tests.  Automata are
// written with arbitrary vertex labels, as they appear in figures, and
// converted to canonical form.

#ifndef STALLINGS_TESTS_EXAMPLES_HPP_
#define STALLINGS_TESTS_EXAMPLES_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "stallings/automaton.hpp"
#include "stallings/freegroup.hpp"

namespace stallings::examples {

  struct LabeledEdge {
    int         source;
    std::string label;
    int         target;
  };

  // Vertex labels are renumbered densely; the result is canonical (and not
  // trimmed).
  inline InverseAutomaton drawn(Alphabet const& alphabet, int basepoint,
                                std::vector<LabeledEdge> const& edges) {
    std::map<int, State> id;
    auto number = [&id](int v) {
      return id.emplace(v, static_cast<State>(id.size())).first->second;
    };
    number(basepoint);
    std::vector<Edge> out;
    for (auto const& e : edges) {
      State s = number(e.source);
      State t = number(e.target);
      out.push_back({s, alphabet.at(e.label), t});
    }
    return InverseAutomaton::from_edges(alphabet, id.size(), 0, out);
  }

  inline InverseAutomaton from_words(Alphabet const& alphabet,
                                     std::vector<std::string> const& gens) {
    std::vector<Word> words;
    for (auto const& g : gens) {
      words.push_back(parse_word(g, alphabet));
    }
    return stallings(std::span<Word const>(words), alphabet);
  }

  inline Alphabet abc() {
    return Alphabet{"a", "b", "c"};
  }

  inline Alphabet ab() {
    return Alphabet{"a", "b"};
  }

  inline InverseAutomaton whole_ab() {
    return from_words(ab(), {"a", "b"});
  }

  // K = <c, b a^-1 c^-1, a c a^-1>.
  inline std::vector<std::string> folding_example_generators() {
    return {"c", "b a^-1 c^-1", "a c a^-1"};
  }

  // Its Stallings automaton: q0 -a-> p, q0 -b-> p, c-loops at both.
  inline InverseAutomaton folding_example_expected() {
    return drawn(abc(), 0, {{0, "a", 1}, {0, "b", 1}, {0, "c", 0}, {1, "c", 1}});
  }

  // Six-state automaton used for the beta_ab example.
  inline InverseAutomaton six_state() {
    return drawn(abc(), 1,
                 {{2, "a", 1}, {3, "c", 2}, {3, "b", 4}, {5, "a", 4},
                  {5, "b", 6}, {1, "a", 6}, {4, "c", 4}});
  }

  // Its image under beta_ab after folding and removing the pendant vertex.
  inline InverseAutomaton six_state_beta() {
    return drawn(abc(), 1,
                 {{1, "a", 5}, {3, "c", 2}, {3, "b", 4}, {5, "a", 3},
                  {7, "b", 1}, {2, "a", 7}, {4, "c", 4}});
  }

  inline Alphabet abcd() {
    return Alphabet{"a", "b", "c", "d"};
  }

  // Seven-state automaton whose delta_c generates a cyclic group of order 6.
  inline InverseAutomaton seven_state() {
    return drawn(abcd(), 1,
                 {{1, "a", 2}, {2, "c", 3}, {4, "b", 3}, {5, "b", 6}, {6, "c", 2},
                  {3, "c", 6}, {7, "c", 1}, {1, "c", 7}, {4, "d", 4}, {5, "d", 5}});
  }

  // Its image under beta_ab: the a-edge 1 -> 2 becomes 1 -a-> 8 -b-> 2.
  inline InverseAutomaton seven_state_beta() {
    return drawn(abcd(), 1,
                 {{1, "a", 8}, {8, "b", 2}, {2, "c", 3}, {4, "b", 3}, {5, "b", 6},
                  {6, "c", 2}, {3, "c", 6}, {7, "c", 1}, {1, "c", 7}, {4, "d", 4},
                  {5, "d", 5}});
  }

  // Core/tail example: 0 -c-> 1, 1 -a-> 2, 2 -b-> 1.
  inline InverseAutomaton core_tail_example() {
    return drawn(abc(), 0, {{0, "c", 1}, {1, "a", 2}, {2, "b", 1}});
  }

  // Cyclonormality example: H (a-loops) is cyclonormal, K (a,b-loops) is
  // not.
  inline InverseAutomaton cyclonormal_H() {
    return drawn(abc(), 1, {{1, "c", 2}, {1, "a", 1}, {2, "a", 2}});
  }
  inline InverseAutomaton cyclonormal_K() {
    return drawn(abc(), 1,
                 {{1, "c", 2}, {1, "a", 1}, {2, "a", 2}, {1, "b", 1}, {2, "b", 2}});
  }

  // <b, a^2, a b a^-1>: kernel of F_{a,b} -> Z_2, a -> 1, b -> 0.
  inline InverseAutomaton kernel_z2() {
    return from_words(ab(), {"b", "a^2", "a b a^-1"});
  }

  // Stabilizer of a point for a -> (1 2), b -> (1 2 3) acting on the six
  // elements of S_3 by right multiplication: the kernel of F_{a,b} -> S_3.
  inline InverseAutomaton s3_kernel() {
    using Perm = std::array<int, 3>;
    auto compose = [](Perm const& f, Perm const& g) {  // first f, then g
      return Perm{g[f[0]], g[f[1]], g[f[2]]};
    };
    Perm const        gens[] = {{1, 0, 2}, {1, 2, 0}};
    std::vector<Perm> elements = {{0, 1, 2}};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (Generator a = 0; a < 2; ++a) {
        Perm next = compose(elements[i], gens[a]);
        auto it   = std::find(elements.begin(), elements.end(), next);
        if (it == elements.end()) {
          elements.push_back(next);
          it = elements.end() - 1;
        }
        edges.push_back({static_cast<State>(i), a,
                         static_cast<State>(it - elements.begin())});
      }
    }
    return InverseAutomaton::from_edges(ab(), elements.size(), 0, edges);
  }

}  // namespace stallings::examples

#endif  // STALLINGS_TESTS_EXAMPLES_HPP_
