#include "stallings/analysis.hpp"

#include <algorithm>

#include "stallings/errors.hpp"

namespace stallings {

  namespace {
    bool off_diagonal_ranks_at_most(InverseAutomaton const& aut, std::size_t bound) {
      ProductAutomaton p(aut, aut);
      for (std::size_t c = 0; c < p.component_count(); ++c) {
        if (p.has_off_diagonal_pair(c) && rank_of_component(p.component_graph(c)) > bound) {
          return false;
        }
      }
      return true;
    }

    bool pure_by_h_classes(TransitionMonoid const& m) {
      auto classes = group_H_classes(m);
      return std::all_of(classes.begin(), classes.end(), [](GroupHClass const& h) {
        return h.members.size() == 1;
      });
    }

    bool pure_by_powers(TransitionMonoid const& m) {
      std::size_t const N = m.size();
      for (auto const& f : m.elements()) {
        auto fN = power(f, N);
        if (fN * f != fN) {
          return false;
        }
      }
      return true;
    }

    bool is_prime(unsigned p) {
      if (p < 2) {
        return false;
      }
      for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    bool is_pi_number(std::size_t n, std::span<unsigned const> pi) {
      for (unsigned p : pi) {
        while (n % p == 0) {
          n /= p;
        }
      }
      return n == 1;
    }

    template <typename Pred>
    bool all_orders(TransitionMonoid const& m, Pred pred) {
      for (auto const& h : group_H_classes(m)) {
        for (std::size_t order : h.orders) {
          if (!pred(order)) {
            return false;
          }
        }
      }
      return true;
    }

    std::size_t choose2(std::size_t n) {
      return n * (n - 1) / 2;
    }
  }  // namespace

  bool is_normal(InverseAutomaton const& aut) {
    if (aut.trivial() || aut.whole_group()) {
      return true;
    }
    if (!aut.complete()) {
      return false;
    }
    try {
      return generate_monoid(aut, aut.state_count()).size() == aut.state_count();
    } catch (CapExceeded const&) {
      return false;
    }
  }

  bool malnormal_by_idempotents(InverseAutomaton const& aut, TransitionMonoid const& m) {
    if (aut.trivial() || aut.whole_group()) {
      return true;
    }
    auto p = idempotent_poset(aut, m);
    return p.k == 2 && p.E.size() == aut.state_count() + 1;
  }

  bool malnormal_by_idempotents(InverseAutomaton const& aut, std::size_t cap) {
    if (aut.trivial() || aut.whole_group()) {
      return true;
    }
    return malnormal_by_idempotents(aut, generate_monoid(aut, cap));
  }

  bool malnormal_by_product(InverseAutomaton const& aut) {
    return off_diagonal_ranks_at_most(aut, 0);
  }

  bool is_malnormal(InverseAutomaton const& aut, std::size_t cap) {
    bool by_product     = malnormal_by_product(aut);
    bool by_idempotents = malnormal_by_idempotents(aut, cap);
    if (by_product != by_idempotents) {
      throw InconsistencyError("malnormality criteria disagree: product says "
                               + std::string(by_product ? "true" : "false")
                               + ", idempotents say "
                               + std::string(by_idempotents ? "true" : "false"));
    }
    return by_product;
  }

  bool is_cyclonormal(InverseAutomaton const& aut) {
    if (aut.state_count() == 1 || aut.alphabet().size() == 1) {
      return true;
    }
    return off_diagonal_ranks_at_most(aut, 1);
  }

  CyclonormalBounds cyclonormal_bounds(InverseAutomaton const& aut, TransitionMonoid const& m) {
    if (aut.trivial() || aut.whole_group()) {
      throw PreconditionError("cyclonormal bounds need 1 != K < F_A");
    }
    if (aut.alphabet().size() < 2) {
      throw PreconditionError("cyclonormal bounds need at least two generators");
    }
    if (!is_cyclonormal(aut)) {
      throw PreconditionError("subgroup is not cyclonormal");
    }
    auto              p = idempotent_poset(aut, m);
    std::size_t const n = aut.state_count();
    CyclonormalBounds b{p.k, p.E.size(), p.k == 2 || p.k == 3};
    if (b.satisfied && n > 2) {
      std::size_t limit = (p.k == 2 ? 0 : n) + choose2(n) + 1;
      b.satisfied       = b.E <= limit;
    }
    return b;
  }

  CyclonormalBounds cyclonormal_bounds(InverseAutomaton const& aut, std::size_t cap) {
    return cyclonormal_bounds(aut, generate_monoid(aut, cap));
  }

  bool is_pure(TransitionMonoid const& m) {
    bool by_classes = pure_by_h_classes(m);
    if (by_classes != pure_by_powers(m)) {
      throw InconsistencyError("aperiodicity criteria disagree");
    }
    return by_classes;
  }

  bool is_pure(InverseAutomaton const& aut, std::size_t cap) {
    return is_pure(generate_monoid(aut, cap));
  }

  bool in_Bk_bar(TransitionMonoid const& m, std::size_t k) {
    if (k == 0) {
      throw PreconditionError("k must be positive");
    }
    return all_orders(m, [k](std::size_t order) { return k % order == 0; });
  }

  bool in_Bk_bar(InverseAutomaton const& aut, std::size_t k, std::size_t cap) {
    return in_Bk_bar(generate_monoid(aut, cap), k);
  }

  bool in_Gpi_bar(TransitionMonoid const& m, std::span<unsigned const> pi) {
    for (unsigned p : pi) {
      if (!is_prime(p)) {
        throw PreconditionError(std::to_string(p) + " is not a prime");
      }
    }
    return all_orders(m, [pi](std::size_t order) { return is_pi_number(order, pi); });
  }

  bool in_Gpi_bar(InverseAutomaton const& aut, std::span<unsigned const> pi, std::size_t cap) {
    return in_Gpi_bar(generate_monoid(aut, cap), pi);
  }

  bool satisfies_group_identities(InverseAutomaton const& aut,
                                  std::span<Word const>   identities,
                                  std::size_t             variable_count,
                                  std::size_t             cap) {
    if (!index(aut)) {
      throw PreconditionError("group identities need a subgroup of finite index");
    }
    for (auto const& u : identities) {
      for (Letter x : u.letters()) {
        if (x.generator >= variable_count) {
          throw PreconditionError("identity uses an undeclared variable");
        }
      }
    }
    auto                          m = generate_monoid(aut, cap);
    std::vector<PartialInjection> inverses;
    inverses.reserve(m.size());
    for (auto const& f : m.elements()) {
      inverses.push_back(f.inverse());
    }
    auto const& id = m.element(m.identity());

    std::vector<std::size_t> assignment(variable_count, 0);
    while (true) {
      for (auto const& u : identities) {
        PartialInjection value = id;
        for (Letter x : u.letters()) {
          std::size_t i = assignment[x.generator];
          value         = value * (x.inverse ? inverses[i] : m.element(i));
        }
        if (value != id) {
          return false;
        }
      }
      std::size_t v = 0;
      while (v < variable_count && ++assignment[v] == m.size()) {
        assignment[v++] = 0;
      }
      if (v == variable_count) {
        return true;
      }
    }
  }

  bool is_automorphism(EndomorphismSpec const& e) {
    return stallings(std::span<ReducedWord const>(e.images()), e.alphabet()).whole_group();
  }

  PropertyReport analyze(InverseAutomaton const& aut, AnalysisOptions const& options) {
    PropertyReport r;
    r.state_count = aut.state_count();
    r.edge_count  = aut.edge_count();
    r.rank        = aut.rank();
    r.index       = index(aut);
    r.trivial     = aut.trivial();
    r.whole_group = aut.whole_group();

    auto m        = generate_monoid(aut, options.monoid_cap);
    r.monoid_size = m.size();
    r.idempotents = std::count_if(m.elements().begin(), m.elements().end(),
                                  [](PartialInjection const& f) { return f.is_idempotent(); });
    auto classes      = group_H_classes(m);
    r.group_h_classes = classes.size();
    for (auto const& h : classes) {
      r.max_group_order = std::max(r.max_group_order, h.members.size());
    }

    r.normal = is_normal(aut);

    r.malnormal_by_product     = malnormal_by_product(aut);
    r.malnormal_by_idempotents = malnormal_by_idempotents(aut, m);
    r.malnormal                = r.malnormal_by_product;
    if (r.malnormal_by_product != r.malnormal_by_idempotents) {
      r.inconsistencies.push_back("malnormal");
    }

    r.cyclonormal = is_cyclonormal(aut);

    r.pure_by_h_classes = pure_by_h_classes(m);
    r.pure_by_powers    = pure_by_powers(m);
    r.pure              = r.pure_by_h_classes;
    if (r.pure_by_h_classes != r.pure_by_powers) {
      r.inconsistencies.push_back("pure");
    }

    if (!aut.trivial()) {
      auto p   = idempotent_poset(aut, m);
      r.E_size = p.E.size();
      r.k      = p.k;
      if (!aut.whole_group() && aut.alphabet().size() >= 2 && r.cyclonormal) {
        r.bounds = cyclonormal_bounds(aut, m);
        if (!r.bounds->satisfied) {
          r.inconsistencies.push_back("cyclonormal-bounds");
        }
      }
    }

    for (std::size_t k : options.k_values) {
      r.Bk.emplace_back(k, in_Bk_bar(m, k));
    }
    for (auto const& pi : options.pi_sets) {
      r.Gpi.emplace_back(pi, in_Gpi_bar(m, pi));
    }
    return r;
  }

}  // namespace stallings
