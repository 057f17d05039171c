// Word algebra of a finitely generated free group F_A.
//
// Words are sequences of letters x or x^-1 over a fixed ordered alphabet.  The
// alphabet order is used for every deterministic tie-break in the library
// (canonical state numbering, shortest witnesses, enumeration order): letters
// are ordered a, a^-1, b, b^-1, ... which is exactly the order of
// Letter::index().

#ifndef STALLINGS_FREEGROUP_HPP_
#define STALLINGS_FREEGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stallings {

  using Generator = std::uint32_t;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    Alphabet(std::initializer_list<std::string> names)
        : Alphabet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(Generator g) const {
      return _names.at(g);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<Generator> find(std::string_view name) const;
    Generator at(std::string_view name) const;

    // Every generator name is one character: enables the compact "aB" syntax.
    bool single_character() const noexcept {
      return _single_char;
    }

    bool operator==(Alphabet const& other) const noexcept {
      return _names == other._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, Generator>   _index;
    bool                                         _single_char = false;
  };

  struct Letter {
    Generator generator = 0;
    bool      inverse   = false;

    constexpr Letter() = default;
    constexpr Letter(Generator g, bool inv = false) : generator(g), inverse(inv) {}

    constexpr Letter inverted() const noexcept {
      return Letter(generator, !inverse);
    }
    // Position in the 2|A| letter order a, a^-1, b, b^-1, ...
    constexpr std::size_t index() const noexcept {
      return 2 * static_cast<std::size_t>(generator) + (inverse ? 1 : 0);
    }
    static constexpr Letter from_index(std::size_t i) noexcept {
      return Letter(static_cast<Generator>(i / 2), (i % 2) == 1);
    }
    constexpr bool cancels(Letter other) const noexcept {
      return generator == other.generator && inverse != other.inverse;
    }

    constexpr auto operator<=>(Letter const& other) const noexcept {
      return index() <=> other.index();
    }
    constexpr bool operator==(Letter const& other) const noexcept = default;
  };

  // A possibly unreduced word.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    void push_back(Letter x) {
      _letters.push_back(x);
    }
    Word& operator*=(Word const& other);

    auto operator<=>(Word const& other) const = default;

   private:
    std::vector<Letter> _letters;
  };

  Word operator*(Word lhs, Word const& rhs);

  class ReducedWord;
  ReducedWord free_reduce(Word const& w);

  // A freely reduced word: no factor x x^-1.  Only free_reduce and the
  // operations below produce values of this type.
  class ReducedWord {
   public:
    ReducedWord() = default;

    std::span<Letter const> letters() const noexcept {
      return _word.letters();
    }
    std::size_t size() const noexcept {
      return _word.size();
    }
    bool empty() const noexcept {
      return _word.empty();
    }
    Letter operator[](std::size_t i) const {
      return _word[i];
    }
    Word const& word() const noexcept {
      return _word;
    }
    operator Word const&() const noexcept {
      return _word;
    }

    bool is_cyclically_reduced() const noexcept;

    auto operator<=>(ReducedWord const& other) const = default;

   private:
    friend ReducedWord free_reduce(Word const& w);
    explicit ReducedWord(Word w) : _word(std::move(w)) {}
    Word _word;
  };

  // Letterwise-inverted reversal.
  Word        invert_word(Word const& w);
  ReducedWord invert(ReducedWord const& w);

  // Product in F_A.
  ReducedWord multiply(ReducedWord const& u, ReducedWord const& v);
  ReducedWord power(ReducedWord const& u, std::int64_t n);

  // u = x w x^-1 with w cyclically reduced.
  struct CyclicDecomposition {
    ReducedWord conjugator;
    ReducedWord cyclic;
  };
  CyclicDecomposition cyclic_decompose(ReducedWord const& u);

  // Word text grammar: whitespace separated tokens, each a generator name
  // optionally followed by "^-1" or "^" and a signed integer (expanded).  The
  // token "1" denotes the identity unless "1" is a generator.  For alphabets of
  // single characters a token that is not a generator name is read
  // character by character, an uppercase character meaning the inverse of
  // its lowercase generator ("aB" = a b^-1).
  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string to_string(Word const& w, Alphabet const& alphabet);
  inline std::string to_string(ReducedWord const& w, Alphabet const& alphabet) {
    return to_string(w.word(), alphabet);
  }

  // An endomorphism of F_A given by the (reduced) images of the generators.
  class EndomorphismSpec {
   public:
    EndomorphismSpec() = default;
    EndomorphismSpec(Alphabet alphabet, std::vector<Word> const& images);

    static EndomorphismSpec identity(Alphabet const& alphabet);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    ReducedWord const& image(Generator g) const {
      return _images.at(g);
    }
    std::vector<ReducedWord> const& images() const noexcept {
      return _images;
    }
    bool is_identity() const;

    bool operator==(EndomorphismSpec const& other) const = default;

   private:
    Alphabet                 _alphabet;
    std::vector<ReducedWord> _images;
  };

  ReducedWord apply_endo_to_word(EndomorphismSpec const& e, Word const& w);

  // The endomorphism "first e1, then e2".
  EndomorphismSpec compose_endos(EndomorphismSpec const& e1,
                                 EndomorphismSpec const& e2);

  enum class NielsenKind { alpha, beta, beta_inverse };

  // alpha_a: a -> a^-1; beta_ab: a -> ab; beta_inverse: a -> ab^-1.  Other
  // generators are fixed.
  EndomorphismSpec nielsen(Alphabet const&          alphabet,
                           NielsenKind              kind,
                           Generator                a,
                           std::optional<Generator> b = std::nullopt);

  struct NielsenStep {
    NielsenKind              kind;
    Generator                a;
    std::optional<Generator> b;

    bool operator==(NielsenStep const&) const = default;
  };

  EndomorphismSpec nielsen_sequence(Alphabet const&                   alphabet,
                                    std::span<NielsenStep const> steps);
  // The reversed sequence of inverted generators.
  std::vector<NielsenStep> formal_inverse(std::span<NielsenStep const> steps);

  // "beta a b; alpha c; betainv a b"
  std::vector<NielsenStep> parse_nielsen(std::string_view text,
                                         Alphabet const&  alphabet);

}  // namespace stallings

#endif  // STALLINGS_FREEGROUP_HPP_
