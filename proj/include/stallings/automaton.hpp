// Inverse automata over F_A: flower automata, Stallings folding, trimming,
// core/tail decomposition, products, isomorphism, bases, conjugation,
// intersection and the image of a subgroup under an endomorphism.
//
// Only positive edges are stored explicitly; every edge p -a-> q carries the
// ghost inverse q -a^-1-> p.  An InverseAutomaton is always kept in canonical
// form: states are numbered breadth-first from the basepoint (state 0),
// exploring letters in the order a, a^-1, b, b^-1, ...  Two Stallings
// automata are therefore isomorphic (as pointed automata) iff they compare
// equal.

#ifndef STALLINGS_AUTOMATON_HPP_
#define STALLINGS_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "stallings/freegroup.hpp"

namespace stallings {

  using State = std::uint32_t;

  inline constexpr State kNoState = std::numeric_limits<State>::max();

  struct Edge {
    State     source;
    Generator label;
    State     target;

    auto operator<=>(Edge const&) const = default;
  };

  // Connected or not, deterministic and co-deterministic labeled graph with
  // involutive closure.  Used for automata, cores and product components.
  class LabeledGraph {
   public:
    LabeledGraph() = default;
    LabeledGraph(std::size_t alphabet_size, std::size_t vertex_count);

    // Throws InvariantError if an edge breaks determinism or
    // co-determinism or references a missing vertex/generator.
    static LabeledGraph from_edges(std::size_t            alphabet_size,
                                   std::size_t            vertex_count,
                                   std::span<Edge const>  edges);

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }
    std::size_t vertex_count() const noexcept {
      return _vertex_count;
    }
    std::size_t edge_count() const noexcept {
      return _edge_count;
    }

    State next(State q, Letter x) const noexcept {
      return _table[q * 2 * _alphabet_size + x.index()];
    }
    State next(State q, std::size_t letter_index) const noexcept {
      return _table[q * 2 * _alphabet_size + letter_index];
    }

    void add_edge(State source, Generator label, State target);

    // Incident edge ends; a loop counts twice.
    std::size_t degree(State q) const noexcept;
    bool        connected() const;
    bool        complete() const noexcept;
    // Positive edges ordered by (source, label).
    std::vector<Edge> edges() const;

    bool operator==(LabeledGraph const&) const = default;

   private:
    std::size_t        _alphabet_size = 0;
    std::size_t        _vertex_count  = 0;
    std::size_t        _edge_count    = 0;
    std::vector<State> _table;
  };

  // Renumber the vertices reachable from root breadth-first (root = 0);
  // unreachable vertices are dropped.  old_to_new maps dropped vertices to
  // kNoState.
  struct Relabelled {
    LabeledGraph       graph;
    std::vector<State> old_to_new;
  };
  Relabelled canonical_relabel(LabeledGraph const& g, State root);

  // Automaton with an arbitrary multiset of positive edges, before folding.
  struct MultiAutomaton {
    Alphabet          alphabet;
    std::size_t       state_count = 1;
    State             basepoint   = 0;
    std::vector<Edge> edges;
  };

  class InverseAutomaton {
   public:
    // The automaton of the trivial subgroup: one state, no edges.
    explicit InverseAutomaton(Alphabet alphabet);

    // Validates determinism, co-determinism and connectivity (InvariantError)
    // and returns the canonical form.  No trimming is performed.
    static InverseAutomaton from_edges(Alphabet const&       alphabet,
                                       std::size_t           state_count,
                                       State                 basepoint,
                                       std::span<Edge const> edges,
                                       std::vector<State>*   old_to_new = nullptr);
    static InverseAutomaton from_graph(Alphabet const&     alphabet,
                                       LabeledGraph const& graph,
                                       State               basepoint,
                                       std::vector<State>* old_to_new = nullptr);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    LabeledGraph const& graph() const noexcept {
      return _graph;
    }
    std::size_t state_count() const noexcept {
      return _graph.vertex_count();
    }
    std::size_t edge_count() const noexcept {
      return _graph.edge_count();
    }
    static constexpr State basepoint() noexcept {
      return 0;
    }
    State next(State q, Letter x) const noexcept {
      return _graph.next(q, x);
    }
    std::vector<Edge> edges() const {
      return _graph.edges();
    }
    // K = 1.
    bool trivial() const noexcept {
      return _graph.edge_count() == 0;
    }
    bool complete() const noexcept {
      return _graph.complete();
    }
    // K = F_A.
    bool whole_group() const noexcept {
      return state_count() == 1 && complete();
    }
    // Free rank of K.
    std::size_t rank() const noexcept {
      return edge_count() + 1 - state_count();
    }

    bool operator==(InverseAutomaton const&) const = default;

   private:
    InverseAutomaton(Alphabet alphabet, LabeledGraph graph)
        : _alphabet(std::move(alphabet)), _graph(std::move(graph)) {}

    Alphabet     _alphabet;
    LabeledGraph _graph;
  };

  // One petal per nonempty reduced generator, glued at the basepoint.
  MultiAutomaton flower(std::span<ReducedWord const> gens, Alphabet const& alphabet);

  // Stallings folding (union-find with a conflict worklist).
  InverseAutomaton fold(MultiAutomaton const& m);

  // Removes non-basepoint vertices of degree <= 1 until none remain.
  InverseAutomaton trim(InverseAutomaton const& aut);

  // S(K) for K generated by gens (reduced internally).
  InverseAutomaton stallings(std::span<Word const> gens, Alphabet const& alphabet);
  InverseAutomaton stallings(std::span<ReducedWord const> gens, Alphabet const& alphabet);

  // Endpoint of the path labeled w from q, or nullopt when it leaves the
  // automaton.
  std::optional<State> run(InverseAutomaton const& aut, State q, Word const& w);

  bool member(InverseAutomaton const& aut, Word const& w);

  // [F_A : K]; nullopt means infinite.
  std::optional<std::size_t> index(InverseAutomaton const& aut);

  struct CoreTail {
    LabeledGraph core;  // vertex 0 is where the tail meets the core
    ReducedWord  tail;
  };
  // nullopt for K = 1, which has no core.
  std::optional<CoreTail> core_and_tail(InverseAutomaton const& aut);

  class ProductAutomaton {
   public:
    ProductAutomaton(InverseAutomaton const& a1, InverseAutomaton const& a2);

    std::size_t left_size() const noexcept {
      return _n1;
    }
    std::size_t right_size() const noexcept {
      return _n2;
    }
    State pair(State p, State q) const noexcept {
      return static_cast<State>(p * _n2 + q);
    }
    State left(State pq) const noexcept {
      return static_cast<State>(pq / _n2);
    }
    State right(State pq) const noexcept {
      return static_cast<State>(pq % _n2);
    }
    LabeledGraph const& graph() const noexcept {
      return _graph;
    }
    std::size_t component_count() const noexcept {
      return _components.size();
    }
    std::size_t component_of(State p, State q) const noexcept {
      return _component[pair(p, q)];
    }
    // Pair ids of a component, ascending.
    std::vector<State> const& component(std::size_t c) const {
      return _components.at(c);
    }
    // The component as a graph, canonically numbered from its smallest pair.
    LabeledGraph component_graph(std::size_t c) const;
    bool         has_diagonal_pair(std::size_t c) const;
    bool         has_off_diagonal_pair(std::size_t c) const;

   private:
    std::size_t                     _n1;
    std::size_t                     _n2;
    LabeledGraph                    _graph;
    std::vector<std::size_t>        _component;
    std::vector<std::vector<State>> _components;
  };

  ProductAutomaton product(InverseAutomaton const& a1, InverseAutomaton const& a2);

  // Free rank of the fundamental group: edges - vertices + 1.  Throws on a
  // disconnected graph.
  std::size_t rank_of_component(LabeledGraph const& g);

  // A label-preserving bijection g1 -> g2, if any.
  std::optional<std::vector<State>> graphs_isomorphic(LabeledGraph const& g1,
                                                      LabeledGraph const& g2);

  // Spanning-tree basis: one word per positive edge outside the breadth-first
  // tree; |basis| = rank.
  std::vector<ReducedWord> basis(InverseAutomaton const& aut);

  // S(w K w^-1).
  InverseAutomaton conjugate_subgroup(InverseAutomaton const& aut, ReducedWord const& w);

  // S(H ∩ K).
  InverseAutomaton intersect(InverseAutomaton const& a1, InverseAutomaton const& a2);

  // S(K phi) by edge replacement, folding and trimming.  An edge whose label
  // has trivial image is contracted (its endpoints are identified).
  InverseAutomaton apply_endo_to_subgroup(InverseAutomaton const& aut,
                                          EndomorphismSpec const& e);

  inline bool equal_subgroups(InverseAutomaton const& h, InverseAutomaton const& k) {
    return h == k;
  }

  // Some w with w^-1 H w = K, or nullopt when H and K are not conjugate.
  std::optional<ReducedWord> conjugator(InverseAutomaton const& h,
                                        InverseAutomaton const& k);

}  // namespace stallings

#endif  // STALLINGS_AUTOMATON_HPP_
