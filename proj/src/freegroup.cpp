#include "stallings/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "stallings/errors.hpp"

namespace stallings {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool valid_name(std::string const& name) {
      if (name.empty()) {
        return false;
      }
      return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '^';
      });
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    if (_names.empty()) {
      throw InvariantError("an alphabet needs at least one generator");
    }
    _single_char = true;
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!valid_name(_names[i])) {
        throw InvariantError("invalid generator name \"" + _names[i] + "\"");
      }
      if (!_index.emplace(_names[i], static_cast<Generator>(i)).second) {
        throw InvariantError("duplicate generator name \"" + _names[i] + "\"");
      }
      _single_char = _single_char && _names[i].size() == 1;
    }
  }

  std::optional<Generator> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Generator Alphabet::at(std::string_view name) const {
    auto g = find(name);
    if (!g) {
      throw InvariantError("unknown generator \"" + std::string(name) + "\"");
    }
    return *g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word& Word::operator*=(Word const& other) {
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  ReducedWord free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter x : w.letters()) {
      if (!stack.empty() && stack.back().cancels(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return ReducedWord(Word(std::move(stack)));
  }

  bool ReducedWord::is_cyclically_reduced() const noexcept {
    return size() < 2 || !_word[0].cancels(_word[size() - 1]);
  }

  Word invert_word(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverted());
    }
    return Word(std::move(out));
  }

  ReducedWord invert(ReducedWord const& w) {
    // The inverse of a reduced word is reduced.
    return free_reduce(invert_word(w.word()));
  }

  ReducedWord multiply(ReducedWord const& u, ReducedWord const& v) {
    return free_reduce(u.word() * v.word());
  }

  ReducedWord power(ReducedWord const& u, std::int64_t n) {
    ReducedWord base = n < 0 ? invert(u) : u;
    Word        out;
    for (std::int64_t i = 0; i < std::abs(n); ++i) {
      out *= base.word();
    }
    return free_reduce(out);
  }

  CyclicDecomposition cyclic_decompose(ReducedWord const& u) {
    std::size_t n = u.size();
    std::size_t k = 0;
    while (2 * k + 1 < n && u[k].cancels(u[n - 1 - k])) {
      ++k;
    }
    auto        letters = u.letters();
    Word        x(std::vector<Letter>(letters.begin(), letters.begin() + k));
    Word        w(std::vector<Letter>(letters.begin() + k, letters.end() - k));
    return {free_reduce(x), free_reduce(w)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void append_power(Word& out, Letter x, std::int64_t n) {
      Letter y = n < 0 ? x.inverted() : x;
      for (std::int64_t i = 0; i < std::abs(n); ++i) {
        out.push_back(y);
      }
    }

    void parse_token(std::string_view token,
                     std::size_t      column,
                     Alphabet const&  alphabet,
                     Word&            out) {
      auto        caret = token.find('^');
      std::string name(token.substr(0, caret));
      if (caret == std::string_view::npos) {
        if (auto g = alphabet.find(name)) {
          out.push_back(Letter(*g));
          return;
        }
        if (name == "1") {
          return;
        }
        if (alphabet.single_character()) {
          for (std::size_t i = 0; i < name.size(); ++i) {
            char c = name[i];
            if (auto g = alphabet.find(std::string(1, c))) {
              out.push_back(Letter(*g));
              continue;
            }
            auto lower = static_cast<char>(
                std::tolower(static_cast<unsigned char>(c)));
            if (lower != c) {
              if (auto g = alphabet.find(std::string(1, lower))) {
                out.push_back(Letter(*g, true));
                continue;
              }
            }
            throw ParseError("unknown generator '" + std::string(1, c) + "'",
                             column + i);
          }
          return;
        }
        throw ParseError("unknown generator \"" + name + "\"", column);
      }
      auto g = alphabet.find(name);
      if (!g) {
        throw ParseError("unknown generator \"" + name + "\"", column);
      }
      std::string_view exponent = token.substr(caret + 1);
      std::int64_t     n        = 0;
      auto const*      first    = exponent.data();
      auto const*      last     = exponent.data() + exponent.size();
      if (!exponent.empty() && exponent.front() == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, n);
      if (exponent.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("malformed exponent \"" + std::string(exponent) + "\"",
                         column + caret + 1);
      }
      if (std::abs(n) > 1'000'000) {
        throw ParseError("exponent out of range", column + caret + 1);
      }
      append_power(out, Letter(*g), n);
    }
  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word        out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      parse_token(text.substr(i, j - i), i + 1, alphabet, out);
      i = j;
    }
    return out;
  }

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.name(w[i].generator);
      if (w[i].inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  EndomorphismSpec::EndomorphismSpec(Alphabet alphabet, std::vector<Word> const& images)
      : _alphabet(std::move(alphabet)) {
    if (images.size() != _alphabet.size()) {
      throw InvariantError("an endomorphism needs exactly one image per generator");
    }
    _images.reserve(images.size());
    for (auto const& w : images) {
      for (Letter x : w.letters()) {
        if (x.generator >= _alphabet.size()) {
          throw InvariantError("image uses a letter outside the alphabet");
        }
      }
      _images.push_back(free_reduce(w));
    }
  }

  EndomorphismSpec EndomorphismSpec::identity(Alphabet const& alphabet) {
    std::vector<Word> images;
    for (Generator g = 0; g < alphabet.size(); ++g) {
      images.push_back(Word{Letter(g)});
    }
    return EndomorphismSpec(alphabet, images);
  }

  bool EndomorphismSpec::is_identity() const {
    for (Generator g = 0; g < _images.size(); ++g) {
      if (_images[g].size() != 1 || _images[g][0] != Letter(g)) {
        return false;
      }
    }
    return true;
  }

  ReducedWord apply_endo_to_word(EndomorphismSpec const& e, Word const& w) {
    Word out;
    for (Letter x : w.letters()) {
      if (x.generator >= e.alphabet().size()) {
        throw InvariantError("word uses a letter outside the alphabet");
      }
      auto const& image = e.image(x.generator);
      if (x.inverse) {
        out *= invert_word(image.word());
      } else {
        out *= image.word();
      }
    }
    return free_reduce(out);
  }

  EndomorphismSpec compose_endos(EndomorphismSpec const& e1,
                                 EndomorphismSpec const& e2) {
    if (!(e1.alphabet() == e2.alphabet())) {
      throw InvariantError("cannot compose endomorphisms over different alphabets");
    }
    std::vector<Word> images;
    for (auto const& u : e1.images()) {
      images.push_back(apply_endo_to_word(e2, u.word()).word());
    }
    return EndomorphismSpec(e1.alphabet(), images);
  }

  EndomorphismSpec nielsen(Alphabet const&          alphabet,
                           NielsenKind              kind,
                           Generator                a,
                           std::optional<Generator> b) {
    if (a >= alphabet.size()) {
      throw InvariantError("Nielsen generator references an unknown letter");
    }
    std::vector<Word> images;
    for (Generator g = 0; g < alphabet.size(); ++g) {
      images.push_back(Word{Letter(g)});
    }
    if (kind == NielsenKind::alpha) {
      images[a] = Word{Letter(a, true)};
      return EndomorphismSpec(alphabet, images);
    }
    if (!b || *b >= alphabet.size()) {
      throw InvariantError("a type 2 Nielsen automorphism needs a second letter");
    }
    if (*b == a) {
      throw InvariantError("a type 2 Nielsen automorphism needs distinct letters");
    }
    images[a] = Word{Letter(a), Letter(*b, kind == NielsenKind::beta_inverse)};
    return EndomorphismSpec(alphabet, images);
  }

  EndomorphismSpec nielsen_sequence(Alphabet const&              alphabet,
                                    std::span<NielsenStep const> steps) {
    auto e = EndomorphismSpec::identity(alphabet);
    for (auto const& s : steps) {
      e = compose_endos(e, nielsen(alphabet, s.kind, s.a, s.b));
    }
    return e;
  }

  std::vector<NielsenStep> formal_inverse(std::span<NielsenStep const> steps) {
    std::vector<NielsenStep> out(steps.rbegin(), steps.rend());
    for (auto& s : out) {
      if (s.kind == NielsenKind::beta) {
        s.kind = NielsenKind::beta_inverse;
      } else if (s.kind == NielsenKind::beta_inverse) {
        s.kind = NielsenKind::beta;
      }
    }
    return out;
  }

  std::vector<NielsenStep> parse_nielsen(std::string_view text,
                                         Alphabet const&  alphabet) {
    std::vector<NielsenStep> steps;
    std::size_t              start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::vector<std::pair<std::string, std::size_t>> tokens;
      std::size_t                                      i = start;
      while (i < end) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < end && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        tokens.emplace_back(std::string(text.substr(i, j - i)), i + 1);
        i = j;
      }
      if (!tokens.empty()) {
        auto const& [name, column] = tokens[0];
        auto letter = [&](std::size_t k) {
          auto g = alphabet.find(tokens[k].first);
          if (!g) {
            throw ParseError("unknown letter \"" + tokens[k].first + "\"",
                             tokens[k].second);
          }
          return *g;
        };
        NielsenStep step{NielsenKind::alpha, 0, std::nullopt};
        if (name == "alpha") {
          if (tokens.size() != 2) {
            throw ParseError("alpha takes one letter", column);
          }
          step.a = letter(1);
        } else if (name == "beta" || name == "betainv") {
          if (tokens.size() != 3) {
            throw ParseError(name + " takes two letters", column);
          }
          step.kind = name == "beta" ? NielsenKind::beta : NielsenKind::beta_inverse;
          step.a    = letter(1);
          step.b    = letter(2);
          if (step.a == *step.b) {
            throw ParseError(name + " needs two distinct letters", tokens[2].second);
          }
        } else {
          throw ParseError("unknown Nielsen generator \"" + name + "\"", column);
        }
        steps.push_back(step);
      }
      start = end + 1;
    }
    return steps;
  }

}  // namespace stallings
