// Decision procedures for subgroup properties read off S(K), its transition
// monoid and the product automaton S(K) x S(K).

#ifndef STALLINGS_ANALYSIS_HPP_
#define STALLINGS_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stallings/automaton.hpp"
#include "stallings/freegroup.hpp"
#include "stallings/monoid.hpp"

namespace stallings {

  // K is normal iff M(K) is a group of size |Q|.
  bool is_normal(InverseAutomaton const& aut);

  // k = 2 and |E| = |Q| + 1 (K = 1 and K = F_A are malnormal).
  bool malnormal_by_idempotents(InverseAutomaton const& aut,
                                std::size_t             cap = kDefaultMonoidCap);
  bool malnormal_by_idempotents(InverseAutomaton const& aut, TransitionMonoid const& m);
  // No off-diagonal component of S(K) x S(K) carries a cycle.
  bool malnormal_by_product(InverseAutomaton const& aut);
  // Returns the product answer; throws InconsistencyError if the two
  // methods disagree.
  bool is_malnormal(InverseAutomaton const& aut, std::size_t cap = kDefaultMonoidCap);

  // Every off-diagonal component of S(K) x S(K) has rank at most 1.
  bool is_cyclonormal(InverseAutomaton const& aut);

  struct CyclonormalBounds {
    std::size_t k;
    std::size_t E;
    bool        satisfied;
  };
  // Requires 1 != K < F_A, |A| >= 2 and K cyclonormal (PreconditionError).
  CyclonormalBounds cyclonormal_bounds(InverseAutomaton const& aut,
                                       std::size_t             cap = kDefaultMonoidCap);
  CyclonormalBounds cyclonormal_bounds(InverseAutomaton const& aut, TransitionMonoid const& m);

  // Every group H-class is trivial; cross-checked against f^(N+1) = f^N with
  // N = |M| (InconsistencyError on disagreement).
  bool is_pure(TransitionMonoid const& m);
  bool is_pure(InverseAutomaton const& aut, std::size_t cap = kDefaultMonoidCap);
  inline bool is_aperiodic(TransitionMonoid const& m) {
    return is_pure(m);
  }

  // Every element order in every group H-class divides k.
  bool in_Bk_bar(TransitionMonoid const& m, std::size_t k);
  bool in_Bk_bar(InverseAutomaton const& aut, std::size_t k,
                 std::size_t cap = kDefaultMonoidCap);

  // Every element order in every group H-class is a pi-number.  Throws
  // PreconditionError if pi contains a non-prime.
  bool in_Gpi_bar(TransitionMonoid const& m, std::span<unsigned const> pi);
  bool in_Gpi_bar(InverseAutomaton const& aut, std::span<unsigned const> pi,
                  std::size_t cap = kDefaultMonoidCap);
  inline bool is_p_pure(InverseAutomaton const& aut, unsigned p,
                        std::size_t cap = kDefaultMonoidCap) {
    unsigned const pi[] = {p};
    return in_Gpi_bar(aut, pi, cap);
  }

  // M(K) satisfies u = 1 for every identity u, a word over the variables.
  // Requires finite index (PreconditionError otherwise).
  bool satisfies_group_identities(InverseAutomaton const& aut,
                                  std::span<Word const>   identities,
                                  std::size_t             variable_count,
                                  std::size_t             cap = kDefaultMonoidCap);

  // The images generate F_A (free groups of finite rank are hopfian).
  bool is_automorphism(EndomorphismSpec const& e);

  struct AnalysisOptions {
    std::vector<std::size_t>           k_values;
    std::vector<std::vector<unsigned>> pi_sets;
    std::size_t                        monoid_cap = kDefaultMonoidCap;
  };

  struct PropertyReport {
    std::size_t                state_count = 0;
    std::size_t                edge_count  = 0;
    std::size_t                rank        = 0;
    std::optional<std::size_t> index;  // nullopt: infinite
    bool                       trivial     = false;
    bool                       whole_group = false;

    std::size_t monoid_size     = 0;
    std::size_t idempotents     = 0;  // in M(K)
    std::size_t group_h_classes = 0;
    std::size_t max_group_order = 1;

    bool normal      = false;
    bool malnormal   = false;
    bool cyclonormal = false;
    bool pure        = false;

    // |E| and k; absent for K = 1.
    std::optional<std::size_t>       E_size;
    std::optional<std::size_t>       k;
    std::optional<CyclonormalBounds> bounds;

    bool malnormal_by_idempotents = false;
    bool malnormal_by_product     = false;
    bool pure_by_h_classes        = false;
    bool pure_by_powers           = false;

    std::vector<std::pair<std::size_t, bool>>           Bk;
    std::vector<std::pair<std::vector<unsigned>, bool>> Gpi;

    // Cross-checks that failed; empty in a consistent report.
    std::vector<std::string> inconsistencies;
  };

  // Throws CapExceeded when M(K) is larger than options.monoid_cap.
  PropertyReport analyze(InverseAutomaton const& aut, AnalysisOptions const& options = {});

}  // namespace stallings

#endif  // STALLINGS_ANALYSIS_HPP_
