// The transition monoid M(K) of an inverse automaton as a monoid of partial
// injections of its state set, with Green's relations, group H-classes, the
// natural partial order and the idempotents realized by reduced words.
//
// Composition is left to right: (q)(f * g) = ((q)f)g, so the transition of a
// word uv is transition(u) * transition(v).

#ifndef STALLINGS_MONOID_HPP_
#define STALLINGS_MONOID_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stallings/automaton.hpp"
#include "stallings/freegroup.hpp"

namespace stallings {

  inline constexpr std::size_t kDefaultMonoidCap = 1'000'000;

  class PartialInjection {
   public:
    PartialInjection() = default;
    // image[q] is the image of q or kNoState.  Throws InvariantError if two
    // states share an image or an image is out of range.
    explicit PartialInjection(std::vector<State> image);

    static PartialInjection identity(std::size_t n);
    static PartialInjection empty(std::size_t n);
    // The identity restricted to the given states.
    static PartialInjection identity_on(std::size_t n, std::vector<State> const& states);

    std::size_t degree() const noexcept {
      return _image.size();
    }
    State operator()(State q) const {
      return _image.at(q);
    }
    std::vector<State> const& images() const noexcept {
      return _image;
    }
    // Sorted.
    std::vector<State> domain() const;
    std::vector<State> range() const;
    std::size_t        rank() const noexcept;

    bool is_empty() const noexcept;
    bool is_total() const noexcept;
    bool is_idempotent() const noexcept;

    PartialInjection operator*(PartialInjection const& g) const;
    PartialInjection inverse() const;

    bool operator==(PartialInjection const&) const = default;
    auto operator<=>(PartialInjection const&) const = default;

   private:
    // Built without validation by the composition operations.
    struct Unchecked {};
    PartialInjection(Unchecked, std::vector<State> image) : _image(std::move(image)) {}

    std::vector<State> _image;
  };

  struct PartialInjectionHash {
    std::size_t operator()(PartialInjection const& f) const noexcept;
  };

  PartialInjection power(PartialInjection const& f, std::size_t n);

  // Pairs "q->r" for the defined points; "0" for the empty map.
  std::string to_string(PartialInjection const& f);

  PartialInjection transition_of_word(InverseAutomaton const& aut, Word const& w);

  inline PartialInjection invert_element(PartialInjection const& f) {
    return f.inverse();
  }

  // f <= g iff f is a restriction of g.
  bool natural_leq(PartialInjection const& f, PartialInjection const& g);

  class TransitionMonoid {
   public:
    std::size_t state_count() const noexcept {
      return _state_count;
    }
    std::size_t letter_count() const noexcept {
      return _letter_count;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<PartialInjection> const& elements() const noexcept {
      return _elements;
    }
    PartialInjection const& element(std::size_t i) const {
      return _elements.at(i);
    }
    // A shortest word realizing element i; ties broken by letter order.
    Word const& witness(std::size_t i) const {
      return _witness.at(i);
    }
    // Index of element(i) * delta(letter) where letter = Letter::from_index(x).
    std::size_t right_multiply(std::size_t i, std::size_t x) const {
      return _cayley[i * _letter_count + x];
    }
    static constexpr std::size_t identity() noexcept {
      return 0;
    }
    std::optional<std::size_t> position(PartialInjection const& f) const;
    // Index of element(i) * element(j); throws if the product is absent,
    // which would mean the monoid is not closed.
    std::size_t multiply(std::size_t i, std::size_t j) const;

    bool is_group() const;

   private:
    friend struct MonoidBuilder;

    std::size_t                                                         _state_count  = 0;
    std::size_t                                                         _letter_count = 0;
    std::vector<PartialInjection>                                       _elements;
    std::vector<Word>                                                   _witness;
    std::vector<std::size_t>                                            _cayley;
    std::unordered_map<PartialInjection, std::size_t, PartialInjectionHash> _index;
  };

  // Breadth-first closure of the identity under right multiplication by the
  // letter transitions, one level at a time with the products of a level
  // computed in parallel.  Throws CapExceeded when more than cap elements
  // appear.  The result is identical to serial::generate_monoid.
  TransitionMonoid generate_monoid(InverseAutomaton const& aut,
                                   std::size_t             cap = kDefaultMonoidCap);

  namespace serial {
    // Single-threaded reference implementation of generate_monoid.
    TransitionMonoid generate_monoid(InverseAutomaton const& aut,
                                     std::size_t             cap = kDefaultMonoidCap);
  }  // namespace serial

  // Each class is a sorted list of element indices; classes are ordered by
  // their smallest element.
  struct GreenClasses {
    std::vector<std::vector<std::size_t>> R;
    std::vector<std::vector<std::size_t>> L;
    std::vector<std::vector<std::size_t>> H;
    std::vector<std::vector<std::size_t>> D;
  };
  GreenClasses green_classes(TransitionMonoid const& m);

  struct GroupHClass {
    std::vector<std::size_t> members;
    std::size_t              identity;  // the idempotent of the class
    std::vector<std::size_t> orders;    // orders[i] is the order of members[i]
  };
  std::vector<GroupHClass> group_H_classes(TransitionMonoid const& m);

  // Indices of the elements delta(u) for u a nonempty reduced word, sorted.
  std::vector<std::size_t> reduced_realizable(TransitionMonoid const& m);
  std::vector<PartialInjection> reduced_realizable(InverseAutomaton const& aut,
                                                   std::size_t cap = kDefaultMonoidCap);

  struct IdempotentPoset {
    std::vector<PartialInjection> E;  // sorted by (rank, image)
    std::size_t                   k = 0;
  };
  // Throws PreconditionError for the trivial subgroup.
  IdempotentPoset idempotent_poset(InverseAutomaton const& aut, TransitionMonoid const& m);
  IdempotentPoset idempotent_poset(InverseAutomaton const& aut,
                                   std::size_t             cap = kDefaultMonoidCap);

}  // namespace stallings

#endif  // STALLINGS_MONOID_HPP_
