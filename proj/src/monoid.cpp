#include "stallings/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stallings/errors.hpp"

namespace stallings {

  ////////////////////////////////////////////////////////////////////////
  // PartialInjection
  ////////////////////////////////////////////////////////////////////////

  PartialInjection::PartialInjection(std::vector<State> image) : _image(std::move(image)) {
    std::vector<bool> hit(_image.size(), false);
    for (State r : _image) {
      if (r == kNoState) {
        continue;
      }
      if (r >= _image.size()) {
        throw InvariantError("partial injection image out of range");
      }
      if (hit[r]) {
        throw InvariantError("partial map is not injective");
      }
      hit[r] = true;
    }
  }

  PartialInjection PartialInjection::identity(std::size_t n) {
    std::vector<State> image(n);
    std::iota(image.begin(), image.end(), State(0));
    return PartialInjection(Unchecked{}, std::move(image));
  }

  PartialInjection PartialInjection::empty(std::size_t n) {
    return PartialInjection(Unchecked{}, std::vector<State>(n, kNoState));
  }

  PartialInjection PartialInjection::identity_on(std::size_t n, std::vector<State> const& states) {
    std::vector<State> image(n, kNoState);
    for (State q : states) {
      image.at(q) = q;
    }
    return PartialInjection(Unchecked{}, std::move(image));
  }

  std::vector<State> PartialInjection::domain() const {
    std::vector<State> out;
    for (State q = 0; q < _image.size(); ++q) {
      if (_image[q] != kNoState) {
        out.push_back(q);
      }
    }
    return out;
  }

  std::vector<State> PartialInjection::range() const {
    std::vector<State> out;
    for (State r : _image) {
      if (r != kNoState) {
        out.push_back(r);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t PartialInjection::rank() const noexcept {
    return _image.size() - std::count(_image.begin(), _image.end(), kNoState);
  }

  bool PartialInjection::is_empty() const noexcept {
    return rank() == 0;
  }

  bool PartialInjection::is_total() const noexcept {
    return rank() == _image.size();
  }

  bool PartialInjection::is_idempotent() const noexcept {
    for (State q = 0; q < _image.size(); ++q) {
      if (_image[q] != kNoState && _image[q] != q) {
        return false;
      }
    }
    return true;
  }

  PartialInjection PartialInjection::operator*(PartialInjection const& g) const {
    if (g._image.size() != _image.size()) {
      throw InvariantError("composing partial injections of different degrees");
    }
    std::vector<State> image(_image.size(), kNoState);
    for (std::size_t q = 0; q < _image.size(); ++q) {
      if (_image[q] != kNoState) {
        image[q] = g._image[_image[q]];
      }
    }
    return PartialInjection(Unchecked{}, std::move(image));
  }

  PartialInjection PartialInjection::inverse() const {
    std::vector<State> image(_image.size(), kNoState);
    for (State q = 0; q < _image.size(); ++q) {
      if (_image[q] != kNoState) {
        image[_image[q]] = q;
      }
    }
    return PartialInjection(Unchecked{}, std::move(image));
  }

  std::size_t PartialInjectionHash::operator()(PartialInjection const& f) const noexcept {
    // FNV-1a over the image table.
    std::size_t h = 14695981039346656037ull;
    for (State r : f.images()) {
      h ^= r;
      h *= 1099511628211ull;
    }
    return h;
  }

  PartialInjection power(PartialInjection const& f, std::size_t n) {
    PartialInjection result = PartialInjection::identity(f.degree());
    PartialInjection base   = f;
    while (n > 0) {
      if (n & 1) {
        result = result * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return result;
  }

  std::string to_string(PartialInjection const& f) {
    std::string out;
    for (State q = 0; q < f.degree(); ++q) {
      if (f(q) == kNoState) {
        continue;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(q) + "->" + std::to_string(f(q));
    }
    return out.empty() ? "0" : out;
  }

  PartialInjection transition_of_word(InverseAutomaton const& aut, Word const& w) {
    std::vector<State> image(aut.state_count());
    for (State q = 0; q < aut.state_count(); ++q) {
      auto end = run(aut, q, w);
      image[q] = end ? *end : kNoState;
    }
    return PartialInjection(std::move(image));
  }

  bool natural_leq(PartialInjection const& f, PartialInjection const& g) {
    if (f.degree() != g.degree()) {
      return false;
    }
    for (State q = 0; q < f.degree(); ++q) {
      if (f(q) != kNoState && f(q) != g(q)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // TransitionMonoid
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> TransitionMonoid::position(PartialInjection const& f) const {
    auto it = _index.find(f);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t TransitionMonoid::multiply(std::size_t i, std::size_t j) const {
    auto p = position(element(i) * element(j));
    if (!p) {
      throw InvariantError("transition monoid is not closed under products");
    }
    return *p;
  }

  bool TransitionMonoid::is_group() const {
    return std::all_of(_elements.begin(), _elements.end(), [](PartialInjection const& f) {
      return f.is_total();
    });
  }

  struct MonoidBuilder {
    TransitionMonoid              m;
    std::vector<PartialInjection> letters;
    std::size_t                   cap;

    MonoidBuilder(InverseAutomaton const& aut, std::size_t cap_) : cap(cap_) {
      if (cap == 0) {
        throw PreconditionError("monoid cap must be positive");
      }
      std::size_t const n = aut.state_count();
      m._state_count      = n;
      m._letter_count     = 2 * aut.alphabet().size();
      for (std::size_t x = 0; x < m._letter_count; ++x) {
        std::vector<State> image(n);
        for (State q = 0; q < n; ++q) {
          image[q] = aut.graph().next(q, x);
        }
        letters.emplace_back(std::move(image));
      }
      add(PartialInjection::identity(n), Word());
    }

    // Index of f, inserting it with the given witness when new.
    std::pair<std::size_t, bool> add(PartialInjection f, Word const& witness) {
      auto it = m._index.find(f);
      if (it != m._index.end()) {
        return {it->second, false};
      }
      if (m._elements.size() >= cap) {
        throw CapExceeded(cap);
      }
      std::size_t i = m._elements.size();
      m._index.emplace(f, i);
      m._elements.push_back(std::move(f));
      m._witness.push_back(witness);
      m._cayley.resize(m._cayley.size() + m._letter_count, 0);
      return {i, true};
    }

    void link(std::size_t i, std::size_t x, PartialInjection product) {
      Word w = m._witness[i];
      w.push_back(Letter::from_index(x));
      auto [j, fresh] = add(std::move(product), w);
      m._cayley[i * m._letter_count + x] = j;
    }
  };

  namespace serial {
    TransitionMonoid generate_monoid(InverseAutomaton const& aut, std::size_t cap) {
      MonoidBuilder b(aut, cap);
      for (std::size_t i = 0; i < b.m.size(); ++i) {
        for (std::size_t x = 0; x < b.m.letter_count(); ++x) {
          b.link(i, x, b.m.element(i) * b.letters[x]);
        }
      }
      return std::move(b.m);
    }
  }  // namespace serial

  TransitionMonoid generate_monoid(InverseAutomaton const& aut, std::size_t cap) {
    MonoidBuilder     b(aut, cap);
    std::size_t const L     = b.m.letter_count();
    std::size_t       begin = 0;
    std::vector<PartialInjection> products;
    while (begin < b.m.size()) {
      std::size_t const end = b.m.size();
      std::size_t const width = (end - begin) * L;
      products.assign(width, PartialInjection());
      auto const& elements = b.m.elements();
      auto const& letters  = b.letters;
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(width); ++t) {
        products[t] = elements[begin + t / L] * letters[t % L];
      }
      // Merging in (element, letter) order reproduces the serial numbering.
      for (std::size_t t = 0; t < width; ++t) {
        b.link(begin + t / L, t % L, std::move(products[t]));
      }
      begin = end;
    }
    return std::move(b.m);
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::vector<std::size_t>> classes_by(TransitionMonoid const&                     m,
                                                     std::vector<std::vector<State>> const& key) {
      std::map<std::vector<State>, std::size_t> id;
      std::vector<std::vector<std::size_t>>     out;
      for (std::size_t i = 0; i < m.size(); ++i) {
        auto [it, fresh] = id.emplace(key[i], out.size());
        if (fresh) {
          out.emplace_back();
        }
        out[it->second].push_back(i);
      }
      return out;
    }
  }  // namespace

  GreenClasses green_classes(TransitionMonoid const& m) {
    std::vector<std::vector<State>> dom(m.size()), im(m.size()), both(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      dom[i]  = m.element(i).domain();
      im[i]   = m.element(i).range();
      both[i] = dom[i];
      both[i].push_back(kNoState);
      both[i].insert(both[i].end(), im[i].begin(), im[i].end());
    }
    GreenClasses g;
    g.R = classes_by(m, dom);
    g.L = classes_by(m, im);
    g.H = classes_by(m, both);

    // Two idempotents are D-related iff some element maps one domain onto
    // the other.
    std::map<std::vector<State>, std::size_t> id;
    for (auto const& d : dom) {
      id.emplace(d, id.size());
    }
    std::vector<std::size_t> parent(id.size());
    std::iota(parent.begin(), parent.end(), std::size_t(0));
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::size_t a = find(id.at(dom[i]));
      std::size_t b = find(id.at(im[i]));
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::vector<State>> dclass(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      dclass[i] = {static_cast<State>(find(id.at(dom[i])))};
    }
    g.D = classes_by(m, dclass);
    return g;
  }

  std::vector<GroupHClass> group_H_classes(TransitionMonoid const& m) {
    std::vector<GroupHClass> out;
    for (auto const& h : green_classes(m).H) {
      auto const& f = m.element(h.front());
      if (f.domain() != f.range()) {
        continue;
      }
      GroupHClass c;
      c.members = h;
      c.identity = *m.position(PartialInjection::identity_on(m.state_count(), f.domain()));
      for (std::size_t i : h) {
        std::size_t      order = 1;
        PartialInjection p     = m.element(i);
        auto const&      e     = m.element(c.identity);
        while (p != e) {
          p = p * m.element(i);
          if (++order > h.size()) {
            throw InvariantError("element order exceeds its H-class size");
          }
        }
        c.orders.push_back(order);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents realized by reduced words
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> reduced_realizable(TransitionMonoid const& m) {
    std::size_t const L = m.letter_count();
    // seen[i * L + x]: element i is realized by a reduced word ending in x.
    std::vector<bool>        seen(m.size() * L, false);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < L; ++x) {
      std::size_t s = m.right_multiply(m.identity(), x) * L + x;
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      std::size_t s = stack.back();
      stack.pop_back();
      std::size_t i = s / L, x = s % L;
      for (std::size_t y = 0; y < L; ++y) {
        if (y == (x ^ 1)) {
          continue;
        }
        std::size_t t = m.right_multiply(i, y) * L + y;
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t x = 0; x < L; ++x) {
        if (seen[i * L + x]) {
          out.push_back(i);
          break;
        }
      }
    }
    return out;
  }

  std::vector<PartialInjection> reduced_realizable(InverseAutomaton const& aut, std::size_t cap) {
    auto                          m = generate_monoid(aut, cap);
    std::vector<PartialInjection> out;
    for (std::size_t i : reduced_realizable(m)) {
      out.push_back(m.element(i));
    }
    return out;
  }

  IdempotentPoset idempotent_poset(InverseAutomaton const& aut, TransitionMonoid const& m) {
    if (aut.trivial()) {
      throw PreconditionError("the idempotent poset needs a nontrivial subgroup");
    }
    IdempotentPoset p;
    for (std::size_t i : reduced_realizable(m)) {
      if (m.element(i).is_idempotent()) {
        p.E.push_back(m.element(i));
      }
    }
    std::sort(p.E.begin(), p.E.end(), [](auto const& e, auto const& f) {
      return std::pair(e.rank(), e.images()) < std::pair(f.rank(), f.images());
    });
    // Idempotents are ordered by domain inclusion; sorted by rank, every
    // strictly smaller element comes first.
    std::vector<std::size_t> chain(p.E.size(), 1);
    for (std::size_t i = 0; i < p.E.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (p.E[j].rank() < p.E[i].rank() && natural_leq(p.E[j], p.E[i])) {
          chain[i] = std::max(chain[i], chain[j] + 1);
        }
      }
      p.k = std::max(p.k, chain[i]);
    }
    return p;
  }

  IdempotentPoset idempotent_poset(InverseAutomaton const& aut, std::size_t cap) {
    return idempotent_poset(aut, generate_monoid(aut, cap));
  }

}  // namespace stallings
