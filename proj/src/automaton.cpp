#include "stallings/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "stallings/errors.hpp"

namespace stallings {

  ////////////////////////////////////////////////////////////////////////
  // LabeledGraph
  ////////////////////////////////////////////////////////////////////////

  LabeledGraph::LabeledGraph(std::size_t alphabet_size, std::size_t vertex_count)
      : _alphabet_size(alphabet_size),
        _vertex_count(vertex_count),
        _table(2 * alphabet_size * vertex_count, kNoState) {}

  LabeledGraph LabeledGraph::from_edges(std::size_t           alphabet_size,
                                        std::size_t           vertex_count,
                                        std::span<Edge const> edges) {
    LabeledGraph g(alphabet_size, vertex_count);
    for (auto const& e : edges) {
      g.add_edge(e.source, e.label, e.target);
    }
    return g;
  }

  void LabeledGraph::add_edge(State source, Generator label, State target) {
    if (source >= _vertex_count || target >= _vertex_count) {
      throw InvariantError("edge references a missing state");
    }
    if (label >= _alphabet_size) {
      throw InvariantError("edge label outside the alphabet");
    }
    std::size_t const L   = 2 * _alphabet_size;
    State&            fwd = _table[source * L + 2 * label];
    State&            bwd = _table[target * L + 2 * label + 1];
    if (fwd == target && bwd == source) {
      throw InvariantError("duplicate edge");
    }
    if (fwd != kNoState) {
      throw InvariantError("two edges with the same label leave state "
                           + std::to_string(source) + " (not deterministic)");
    }
    if (bwd != kNoState) {
      throw InvariantError("two edges with the same label enter state "
                           + std::to_string(target) + " (not co-deterministic)");
    }
    fwd = target;
    bwd = source;
    ++_edge_count;
  }

  std::size_t LabeledGraph::degree(State q) const noexcept {
    std::size_t d = 0;
    for (std::size_t x = 0; x < 2 * _alphabet_size; ++x) {
      d += next(q, x) != kNoState;
    }
    return d;
  }

  bool LabeledGraph::connected() const {
    if (_vertex_count == 0) {
      return true;
    }
    std::vector<bool>  seen(_vertex_count, false);
    std::vector<State> stack = {0};
    seen[0]                  = true;
    std::size_t count        = 1;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < 2 * _alphabet_size; ++x) {
        State t = next(q, x);
        if (t != kNoState && !seen[t]) {
          seen[t] = true;
          ++count;
          stack.push_back(t);
        }
      }
    }
    return count == _vertex_count;
  }

  bool LabeledGraph::complete() const noexcept {
    return std::find(_table.begin(), _table.end(), kNoState) == _table.end();
  }

  std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(_edge_count);
    for (State q = 0; q < _vertex_count; ++q) {
      for (Generator g = 0; g < _alphabet_size; ++g) {
        State t = next(q, 2 * g);
        if (t != kNoState) {
          out.push_back({q, g, t});
        }
      }
    }
    return out;
  }

  Relabelled canonical_relabel(LabeledGraph const& g, State root) {
    std::vector<State> old_to_new(g.vertex_count(), kNoState);
    std::vector<State> order;
    order.reserve(g.vertex_count());
    old_to_new[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      State q = order[i];
      for (std::size_t x = 0; x < 2 * g.alphabet_size(); ++x) {
        State t = g.next(q, x);
        if (t != kNoState && old_to_new[t] == kNoState) {
          old_to_new[t] = static_cast<State>(order.size());
          order.push_back(t);
        }
      }
    }
    LabeledGraph out(g.alphabet_size(), order.size());
    for (State q : order) {
      for (Generator a = 0; a < g.alphabet_size(); ++a) {
        State t = g.next(q, 2 * a);
        if (t != kNoState) {
          out.add_edge(old_to_new[q], a, old_to_new[t]);
        }
      }
    }
    return {std::move(out), std::move(old_to_new)};
  }

  ////////////////////////////////////////////////////////////////////////
  // InverseAutomaton
  ////////////////////////////////////////////////////////////////////////

  InverseAutomaton::InverseAutomaton(Alphabet alphabet)
      : _alphabet(std::move(alphabet)), _graph(_alphabet.size(), 1) {}

  InverseAutomaton InverseAutomaton::from_graph(Alphabet const&     alphabet,
                                                LabeledGraph const& graph,
                                                State               basepoint,
                                                std::vector<State>* old_to_new) {
    if (graph.alphabet_size() != alphabet.size()) {
      throw InvariantError("graph and alphabet sizes differ");
    }
    if (basepoint >= graph.vertex_count()) {
      throw InvariantError("basepoint out of range");
    }
    auto r = canonical_relabel(graph, basepoint);
    if (r.graph.vertex_count() != graph.vertex_count()) {
      throw InvariantError("automaton is not connected");
    }
    if (old_to_new != nullptr) {
      *old_to_new = std::move(r.old_to_new);
    }
    return InverseAutomaton(alphabet, std::move(r.graph));
  }

  InverseAutomaton InverseAutomaton::from_edges(Alphabet const&       alphabet,
                                                std::size_t           state_count,
                                                State                 basepoint,
                                                std::span<Edge const> edges,
                                                std::vector<State>*   old_to_new) {
    if (state_count == 0) {
      throw InvariantError("an automaton needs at least one state");
    }
    auto g = LabeledGraph::from_edges(alphabet.size(), state_count, edges);
    return from_graph(alphabet, g, basepoint, old_to_new);
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  MultiAutomaton flower(std::span<ReducedWord const> gens, Alphabet const& alphabet) {
    MultiAutomaton m;
    m.alphabet    = alphabet;
    m.state_count = 1;
    m.basepoint   = 0;
    for (auto const& u : gens) {
      if (u.empty()) {
        continue;
      }
      State from = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        Letter x = u[i];
        if (x.generator >= alphabet.size()) {
          throw InvariantError("generator uses a letter outside the alphabet");
        }
        State to = 0;
        if (i + 1 < u.size()) {
          to = static_cast<State>(m.state_count++);
        }
        if (x.inverse) {
          m.edges.push_back({to, x.generator, from});
        } else {
          m.edges.push_back({from, x.generator, to});
        }
        from = to;
      }
    }
    return m;
  }

  InverseAutomaton fold(MultiAutomaton const& m) {
    std::size_t const n = m.state_count;
    std::size_t const L = 2 * m.alphabet.size();

    std::vector<State> parent(n);
    std::iota(parent.begin(), parent.end(), State(0));
    auto find = [&parent](State q) {
      while (parent[q] != q) {
        parent[q] = parent[parent[q]];
        q         = parent[q];
      }
      return q;
    };

    // table[q * L + x] is some state (possibly stale) reached from class q
    // by letter x; conflicting targets are queued for merging.
    std::vector<State>                  table(n * L, kNoState);
    std::vector<std::pair<State, State>> pending;
    auto attach = [&](State u, std::size_t x, State v) {
      State& slot = table[u * L + x];
      if (slot == kNoState) {
        slot = v;
      } else {
        pending.emplace_back(slot, v);
      }
    };

    for (auto const& e : m.edges) {
      if (e.source >= n || e.target >= n || e.label >= m.alphabet.size()) {
        throw InvariantError("edge out of range in multi-automaton");
      }
      State u = find(e.source);
      State v = find(e.target);
      attach(u, 2 * e.label, v);
      attach(v, 2 * e.label + 1, u);
      while (!pending.empty()) {
        auto [p, q] = pending.back();
        pending.pop_back();
        p = find(p);
        q = find(q);
        if (p == q) {
          continue;
        }
        if (q < p) {
          std::swap(p, q);
        }
        parent[q] = p;
        for (std::size_t x = 0; x < L; ++x) {
          State t = table[q * L + x];
          if (t != kNoState) {
            attach(p, x, t);
          }
        }
      }
    }

    LabeledGraph g(m.alphabet.size(), n);
    for (State q = 0; q < n; ++q) {
      if (find(q) != q) {
        continue;
      }
      for (Generator a = 0; a < m.alphabet.size(); ++a) {
        State t = table[q * L + 2 * a];
        if (t != kNoState) {
          g.add_edge(q, a, find(t));
        }
      }
    }
    auto r = canonical_relabel(g, find(m.basepoint));
    for (State q = 0; q < n; ++q) {
      if (find(q) == q && r.old_to_new[q] == kNoState) {
        throw InvariantError("multi-automaton is not connected");
      }
    }
    return InverseAutomaton::from_graph(m.alphabet, r.graph, 0);
  }

  InverseAutomaton trim(InverseAutomaton const& aut) {
    auto const&              g = aut.graph();
    std::size_t const        n = g.vertex_count();
    std::size_t const        L = 2 * g.alphabet_size();
    std::vector<std::size_t> degree(n);
    std::vector<bool>        removed(n, false);
    std::vector<State>       queue;
    for (State q = 0; q < n; ++q) {
      degree[q] = g.degree(q);
      if (q != aut.basepoint() && degree[q] <= 1) {
        queue.push_back(q);
      }
    }
    while (!queue.empty()) {
      State q = queue.back();
      queue.pop_back();
      if (removed[q]) {
        continue;
      }
      removed[q] = true;
      for (std::size_t x = 0; x < L; ++x) {
        State t = g.next(q, x);
        if (t == kNoState || removed[t]) {
          continue;
        }
        if (--degree[t] <= 1 && t != aut.basepoint()) {
          queue.push_back(t);
        }
      }
    }
    LabeledGraph out(g.alphabet_size(), n);
    for (auto const& e : g.edges()) {
      if (!removed[e.source] && !removed[e.target]) {
        out.add_edge(e.source, e.label, e.target);
      }
    }
    auto r = canonical_relabel(out, aut.basepoint());
    return InverseAutomaton::from_graph(aut.alphabet(), r.graph, 0);
  }

  InverseAutomaton stallings(std::span<ReducedWord const> gens, Alphabet const& alphabet) {
    return trim(fold(flower(gens, alphabet)));
  }

  InverseAutomaton stallings(std::span<Word const> gens, Alphabet const& alphabet) {
    std::vector<ReducedWord> reduced;
    reduced.reserve(gens.size());
    for (auto const& w : gens) {
      reduced.push_back(free_reduce(w));
    }
    return stallings(std::span<ReducedWord const>(reduced), alphabet);
  }

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  std::optional<State> run(InverseAutomaton const& aut, State q, Word const& w) {
    for (Letter x : w.letters()) {
      if (x.generator >= aut.alphabet().size()) {
        throw InvariantError("word uses a letter outside the alphabet");
      }
      q = aut.next(q, x);
      if (q == kNoState) {
        return std::nullopt;
      }
    }
    return q;
  }

  bool member(InverseAutomaton const& aut, Word const& w) {
    auto end = run(aut, aut.basepoint(), free_reduce(w).word());
    return end && *end == aut.basepoint();
  }

  std::optional<std::size_t> index(InverseAutomaton const& aut) {
    if (aut.complete()) {
      return aut.state_count();
    }
    return std::nullopt;
  }

  namespace {
    // Vertices surviving repeated deletion of degree <= 1 vertices.
    std::vector<bool> core_vertices(LabeledGraph const& g) {
      std::size_t const        n = g.vertex_count();
      std::vector<std::size_t> degree(n);
      std::vector<bool>        alive(n, true);
      std::vector<State>       queue;
      for (State q = 0; q < n; ++q) {
        degree[q] = g.degree(q);
        if (degree[q] <= 1) {
          queue.push_back(q);
        }
      }
      while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        if (!alive[q]) {
          continue;
        }
        alive[q] = false;
        for (std::size_t x = 0; x < 2 * g.alphabet_size(); ++x) {
          State t = g.next(q, x);
          if (t != kNoState && alive[t] && --degree[t] <= 1) {
            queue.push_back(t);
          }
        }
      }
      return alive;
    }

    LabeledGraph induced(LabeledGraph const& g, std::vector<bool> const& keep, State root) {
      LabeledGraph sub(g.alphabet_size(), g.vertex_count());
      for (auto const& e : g.edges()) {
        if (keep[e.source] && keep[e.target]) {
          sub.add_edge(e.source, e.label, e.target);
        }
      }
      return canonical_relabel(sub, root).graph;
    }

    // Labels of shortest paths from root to every vertex (breadth-first in
    // letter order).
    std::vector<Word> spanning_paths(LabeledGraph const& g, State root) {
      std::vector<Word> path(g.vertex_count());
      std::vector<bool> seen(g.vertex_count(), false);
      std::deque<State> queue = {root};
      seen[root]              = true;
      while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < 2 * g.alphabet_size(); ++x) {
          State t = g.next(q, x);
          if (t != kNoState && !seen[t]) {
            seen[t] = true;
            path[t] = path[q];
            path[t].push_back(Letter::from_index(x));
            queue.push_back(t);
          }
        }
      }
      return path;
    }
  }  // namespace

  std::optional<CoreTail> core_and_tail(InverseAutomaton const& aut) {
    if (aut.trivial()) {
      return std::nullopt;
    }
    auto const& g     = aut.graph();
    auto        alive = core_vertices(g);
    State       q     = aut.basepoint();
    Word        tail;
    std::optional<Letter> arrived;
    while (!alive[q]) {
      // Off the core every vertex on the way in has exactly one edge that
      // does not go back.
      std::optional<Letter> step;
      for (std::size_t x = 0; x < 2 * g.alphabet_size(); ++x) {
        Letter y = Letter::from_index(x);
        if (g.next(q, y) != kNoState && !(arrived && y == arrived->inverted())) {
          step = y;
          break;
        }
      }
      if (!step) {
        throw InvariantError("automaton is not trim");
      }
      tail.push_back(*step);
      q       = g.next(q, *step);
      arrived = step;
    }
    return CoreTail{induced(g, alive, q), free_reduce(tail)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  ProductAutomaton::ProductAutomaton(InverseAutomaton const& a1, InverseAutomaton const& a2)
      : _n1(a1.state_count()),
        _n2(a2.state_count()),
        _graph(a1.alphabet().size(), a1.state_count() * a2.state_count()) {
    if (!(a1.alphabet() == a2.alphabet())) {
      throw InvariantError("product of automata over different alphabets");
    }
    for (State p = 0; p < _n1; ++p) {
      for (State q = 0; q < _n2; ++q) {
        for (Generator a = 0; a < a1.alphabet().size(); ++a) {
          State p2 = a1.next(p, Letter(a));
          State q2 = a2.next(q, Letter(a));
          if (p2 != kNoState && q2 != kNoState) {
            _graph.add_edge(pair(p, q), a, pair(p2, q2));
          }
        }
      }
    }
    std::size_t const total = _n1 * _n2;
    _component.assign(total, kNoState);
    for (State s = 0; s < total; ++s) {
      if (_component[s] != kNoState) {
        continue;
      }
      std::size_t        c       = _components.size();
      std::vector<State> members = {s};
      _component[s]              = c;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t x = 0; x < 2 * _graph.alphabet_size(); ++x) {
          State t = _graph.next(members[i], x);
          if (t != kNoState && _component[t] == kNoState) {
            _component[t] = c;
            members.push_back(t);
          }
        }
      }
      std::sort(members.begin(), members.end());
      _components.push_back(std::move(members));
    }
  }

  LabeledGraph ProductAutomaton::component_graph(std::size_t c) const {
    auto const& members = _components.at(c);
    return canonical_relabel(_graph, members.front()).graph;
  }

  bool ProductAutomaton::has_diagonal_pair(std::size_t c) const {
    auto const& members = _components.at(c);
    return std::any_of(members.begin(), members.end(), [this](State s) {
      return left(s) == right(s);
    });
  }

  bool ProductAutomaton::has_off_diagonal_pair(std::size_t c) const {
    auto const& members = _components.at(c);
    return std::any_of(members.begin(), members.end(), [this](State s) {
      return left(s) != right(s);
    });
  }

  ProductAutomaton product(InverseAutomaton const& a1, InverseAutomaton const& a2) {
    return ProductAutomaton(a1, a2);
  }

  std::size_t rank_of_component(LabeledGraph const& g) {
    if (g.vertex_count() == 0 || !g.connected()) {
      throw InvariantError("rank of a disconnected graph");
    }
    return g.edge_count() + 1 - g.vertex_count();
  }

  std::optional<std::vector<State>> graphs_isomorphic(LabeledGraph const& g1,
                                                      LabeledGraph const& g2) {
    if (g1.alphabet_size() != g2.alphabet_size()
        || g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()) {
      return std::nullopt;
    }
    std::size_t const n = g1.vertex_count();
    if (n == 0) {
      return std::vector<State>{};
    }
    std::size_t const  L = 2 * g1.alphabet_size();
    std::vector<State> map(n), inverse(n), order;
    order.reserve(n);
    for (State candidate = 0; candidate < n; ++candidate) {
      std::fill(map.begin(), map.end(), kNoState);
      std::fill(inverse.begin(), inverse.end(), kNoState);
      order.clear();
      map[0]             = candidate;
      inverse[candidate] = 0;
      order.push_back(0);
      bool ok = true;
      for (std::size_t i = 0; ok && i < order.size(); ++i) {
        State q = order[i];
        for (std::size_t x = 0; x < L; ++x) {
          State t1 = g1.next(q, x);
          State t2 = g2.next(map[q], x);
          if ((t1 == kNoState) != (t2 == kNoState)) {
            ok = false;
            break;
          }
          if (t1 == kNoState) {
            continue;
          }
          if (map[t1] == kNoState) {
            if (inverse[t2] != kNoState) {
              ok = false;
              break;
            }
            map[t1]     = t2;
            inverse[t2] = t1;
            order.push_back(t1);
          } else if (map[t1] != t2) {
            ok = false;
            break;
          }
        }
      }
      if (ok && order.size() == n) {
        return map;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroup operations
  ////////////////////////////////////////////////////////////////////////

  std::vector<ReducedWord> basis(InverseAutomaton const& aut) {
    auto const&        g = aut.graph();
    std::size_t const  n = g.vertex_count();
    std::vector<Word>  path(n);
    std::vector<State> tree_source(n, kNoState);
    std::vector<Letter> tree_letter(n);
    std::vector<bool>  seen(n, false);
    std::deque<State>  queue = {aut.basepoint()};
    seen[aut.basepoint()]    = true;
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < 2 * g.alphabet_size(); ++x) {
        State t = g.next(q, x);
        if (t != kNoState && !seen[t]) {
          seen[t]        = true;
          tree_source[t] = q;
          tree_letter[t] = Letter::from_index(x);
          path[t]        = path[q];
          path[t].push_back(tree_letter[t]);
          queue.push_back(t);
        }
      }
    }
    std::vector<ReducedWord> out;
    for (auto const& e : g.edges()) {
      bool tree = (e.source != e.target)
                  && ((tree_source[e.target] == e.source
                       && tree_letter[e.target] == Letter(e.label, false))
                      || (tree_source[e.source] == e.target
                          && tree_letter[e.source] == Letter(e.label, true)));
      if (tree) {
        continue;
      }
      Word w = path[e.source];
      w.push_back(Letter(e.label));
      w *= invert_word(path[e.target]);
      out.push_back(free_reduce(w));
    }
    return out;
  }

  InverseAutomaton conjugate_subgroup(InverseAutomaton const& aut, ReducedWord const& w) {
    auto                     gens  = basis(aut);
    ReducedWord const        w_inv = invert(w);
    std::vector<ReducedWord> conj;
    conj.reserve(gens.size());
    for (auto const& g : gens) {
      conj.push_back(multiply(multiply(w, g), w_inv));
    }
    return stallings(std::span<ReducedWord const>(conj), aut.alphabet());
  }

  InverseAutomaton intersect(InverseAutomaton const& a1, InverseAutomaton const& a2) {
    ProductAutomaton p(a1, a2);
    auto g = p.component_graph(p.component_of(a1.basepoint(), a2.basepoint()));
    return trim(InverseAutomaton::from_graph(a1.alphabet(), g, 0));
  }

  InverseAutomaton apply_endo_to_subgroup(InverseAutomaton const& aut,
                                          EndomorphismSpec const& e) {
    if (!(aut.alphabet() == e.alphabet())) {
      throw InvariantError("endomorphism and automaton use different alphabets");
    }
    std::size_t const  n = aut.state_count();
    std::vector<State> parent(n);
    std::iota(parent.begin(), parent.end(), State(0));
    auto find = [&parent](State q) {
      while (parent[q] != q) {
        parent[q] = parent[parent[q]];
        q         = parent[q];
      }
      return q;
    };
    auto const edges = aut.edges();
    for (auto const& edge : edges) {
      if (e.image(edge.label).empty()) {
        State p = find(edge.source), q = find(edge.target);
        if (p != q) {
          parent[std::max(p, q)] = std::min(p, q);
        }
      }
    }
    MultiAutomaton m;
    m.alphabet    = aut.alphabet();
    m.state_count = n;
    m.basepoint   = find(aut.basepoint());
    for (auto const& edge : edges) {
      auto const& image = e.image(edge.label);
      if (image.empty()) {
        continue;
      }
      State from = find(edge.source);
      State last = find(edge.target);
      for (std::size_t i = 0; i < image.size(); ++i) {
        State to = last;
        if (i + 1 < image.size()) {
          to = static_cast<State>(m.state_count++);
        }
        Letter x = image[i];
        if (x.inverse) {
          m.edges.push_back({to, x.generator, from});
        } else {
          m.edges.push_back({from, x.generator, to});
        }
        from = to;
      }
    }
    // Vertices absorbed by contraction are left isolated; fold only keeps
    // the component of the basepoint, so they must not count as
    // disconnected pieces.
    MultiAutomaton compact = m;
    std::vector<State> renumber(m.state_count, kNoState);
    State              next = 0;
    for (State q = 0; q < m.state_count; ++q) {
      if (q >= n || find(q) == q) {
        renumber[q] = next++;
      }
    }
    compact.state_count = next;
    compact.basepoint   = renumber[m.basepoint];
    for (auto& edge : compact.edges) {
      edge.source = renumber[edge.source];
      edge.target = renumber[edge.target];
    }
    return trim(fold(compact));
  }

  std::optional<ReducedWord> conjugator(InverseAutomaton const& h,
                                        InverseAutomaton const& k) {
    if (h.trivial() || k.trivial()) {
      if (h.trivial() && k.trivial()) {
        return ReducedWord();
      }
      return std::nullopt;
    }
    auto ch  = core_and_tail(h);
    auto ck  = core_and_tail(k);
    auto iso = graphs_isomorphic(ch->core, ck->core);
    if (!iso) {
      return std::nullopt;
    }
    // v labels a path in C(K) from the tail end of K to the image of the
    // tail end of H.
    auto        paths = spanning_paths(ck->core, 0);
    ReducedWord v     = free_reduce(paths[(*iso)[0]]);
    return multiply(multiply(ch->tail, invert(v)), invert(ck->tail));
  }

}  // namespace stallings
