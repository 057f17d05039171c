#include "stallings/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "stallings/errors.hpp"

namespace stallings {

  using json = nlohmann::ordered_json;

  namespace {
    struct Position {
      std::size_t line   = 1;
      std::size_t column = 1;
    };

    Position position_of(std::string_view text, std::size_t offset) {
      Position p;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++p.line;
          p.column = 1;
        } else {
          ++p.column;
        }
      }
      return p;
    }

    // Position of the first occurrence of needle, or of the start of text.
    Position locate(std::string_view text, std::string_view needle) {
      auto at = text.find(needle);
      return position_of(text, at == std::string_view::npos ? 0 : at);
    }

    [[noreturn]] void fail(std::string_view text, std::string_view needle, std::string const& what) {
      auto p = locate(text, needle);
      throw ParseError(what, p.column, p.line);
    }

    json parse_json(std::string_view text) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        // e.byte is 1-based and points just past the offending character.
        auto p = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", p.column, p.line);
      }
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        throw ParseError("expected a JSON object", 1, 1);
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"", 1, 1);
      }
      return *it;
    }

    std::string quoted_key(char const* key) {
      return std::string("\"") + key + "\"";
    }

    Alphabet read_alphabet(std::string_view text, json const& j) {
      auto const& a = field(j, "alphabet");
      if (!a.is_array()) {
        fail(text, quoted_key("alphabet"), "\"alphabet\" must be an array of names");
      }
      std::vector<std::string> names;
      for (auto const& n : a) {
        if (!n.is_string()) {
          fail(text, quoted_key("alphabet"), "generator names must be strings");
        }
        names.push_back(n.get<std::string>());
      }
      return Alphabet(std::move(names));
    }

    Word read_word(std::string_view text, std::string const& literal, Alphabet const& alphabet) {
      try {
        return parse_word(literal, alphabet);
      } catch (ParseError const& e) {
        auto at = text.find("\"" + literal + "\"");
        auto p  = position_of(text, at == std::string_view::npos ? 0 : at + 1);
        if (at == std::string_view::npos) {
          throw ParseError(e.what(), p.column, p.line);
        }
        throw ParseError(e.what(), p.column + e.column() - 1, p.line);
      }
    }

    std::size_t read_count(std::string_view text, json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_unsigned()) {
        fail(text, quoted_key(key), std::string("\"") + key + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::string json_string(std::string const& s) {
      return json(s).dump();
    }

    std::string names_array(Alphabet const& alphabet) {
      std::string out = "[";
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        out += (i ? ", " : "") + json_string(alphabet.name(i));
      }
      return out + "]";
    }

    std::string index_string(std::optional<std::size_t> const& i) {
      return i ? std::to_string(*i) : "infinite";
    }

    std::string flag(bool b) {
      return b ? "true" : "false";
    }

    std::string pi_string(std::vector<unsigned> const& pi) {
      std::string out = "{";
      for (std::size_t i = 0; i < pi.size(); ++i) {
        out += (i ? "," : "") + std::to_string(pi[i]);
      }
      return out + "}";
    }
  }  // namespace

  SubgroupFile parse_subgroup_file(std::string_view text) {
    json         j = parse_json(text);
    SubgroupFile f;
    f.alphabet     = read_alphabet(text, j);
    auto const& g  = field(j, "generators");
    if (!g.is_array()) {
      fail(text, quoted_key("generators"), "\"generators\" must be an array of words");
    }
    for (auto const& w : g) {
      if (!w.is_string()) {
        fail(text, quoted_key("generators"), "generators must be strings");
      }
      f.generators.push_back(read_word(text, w.get<std::string>(), f.alphabet));
    }
    return f;
  }

  InverseAutomaton parse_automaton_file(std::string_view text) {
    json        j         = parse_json(text);
    Alphabet    alphabet  = read_alphabet(text, j);
    std::size_t states    = read_count(text, j, "states");
    std::size_t basepoint = read_count(text, j, "basepoint");
    auto const& e         = field(j, "edges");
    if (!e.is_array()) {
      fail(text, quoted_key("edges"), "\"edges\" must be an array");
    }
    std::vector<Edge> edges;
    for (auto const& edge : e) {
      if (!edge.is_array() || edge.size() != 3 || !edge[0].is_number_unsigned()
          || !edge[1].is_string() || !edge[2].is_number_unsigned()) {
        fail(text, edge.dump(), "an edge is [source, \"generator\", target]");
      }
      auto g = alphabet.find(edge[1].get<std::string>());
      if (!g) {
        fail(text, json_string(edge[1].get<std::string>()),
             "unknown generator " + json_string(edge[1].get<std::string>()));
      }
      edges.push_back({edge[0].get<State>(), *g, edge[2].get<State>()});
    }
    if (states == 0) {
      throw InvariantError("an automaton needs at least one state");
    }
    if (basepoint >= states) {
      throw InvariantError("basepoint out of range");
    }
    return trim(InverseAutomaton::from_edges(alphabet, states, static_cast<State>(basepoint),
                                             edges));
  }

  EndomorphismSpec parse_endomorphism_file(std::string_view text) {
    json              j        = parse_json(text);
    Alphabet          alphabet = read_alphabet(text, j);
    auto const&       images   = field(j, "images");
    std::vector<Word> words;
    for (Generator g = 0; g < alphabet.size(); ++g) {
      words.push_back(Word{Letter(g)});
    }
    if (!images.is_object()) {
      fail(text, quoted_key("images"), "\"images\" must map generator names to words");
    }
    for (auto const& [name, w] : images.items()) {
      auto g = alphabet.find(name);
      if (!g) {
        fail(text, json_string(name), "unknown generator " + json_string(name));
      }
      if (!w.is_string()) {
        fail(text, json_string(name), "images must be strings");
      }
      words[*g] = read_word(text, w.get<std::string>(), alphabet);
    }
    return EndomorphismSpec(alphabet, words);
  }

  InverseAutomaton load_subgroup(std::string_view text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("edges")) {
      return parse_automaton_file(text);
    }
    auto f = parse_subgroup_file(text);
    return stallings(std::span<Word const>(f.generators), f.alphabet);
  }

  std::string write_subgroup_file(SubgroupFile const& f) {
    std::string out = "{\n  \"alphabet\": " + names_array(f.alphabet) + ",\n  \"generators\": [";
    for (std::size_t i = 0; i < f.generators.size(); ++i) {
      out += (i ? ", " : "") + json_string(to_string(f.generators[i], f.alphabet));
    }
    return out + "]\n}\n";
  }

  std::string write_automaton_file(InverseAutomaton const& aut) {
    std::string out = "{\n  \"alphabet\": " + names_array(aut.alphabet()) + ",\n";
    out += "  \"states\": " + std::to_string(aut.state_count()) + ",\n";
    out += "  \"basepoint\": " + std::to_string(aut.basepoint()) + ",\n";
    out += "  \"edges\": [";
    auto edges = aut.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out += i ? ",\n    " : "\n    ";
      out += "[" + std::to_string(edges[i].source) + ", "
             + json_string(aut.alphabet().name(edges[i].label)) + ", "
             + std::to_string(edges[i].target) + "]";
    }
    out += edges.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
  }

  std::string to_dot(InverseAutomaton const& aut) {
    std::string out = "digraph S {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (State q = 0; q < aut.state_count(); ++q) {
      out += "  " + std::to_string(q)
             + (q == aut.basepoint() ? " [shape=doublecircle];\n" : ";\n");
    }
    for (auto const& e : aut.edges()) {
      out += "  " + std::to_string(e.source) + " -> " + std::to_string(e.target)
             + " [label=" + json_string(aut.alphabet().name(e.label)) + "];\n";
    }
    return out + "}\n";
  }

  std::string report_text(PropertyReport const& r) {
    std::ostringstream os;
    os << "states:          " << r.state_count << "\n"
       << "edges:           " << r.edge_count << "\n"
       << "rank:            " << r.rank << "\n"
       << "index:           " << index_string(r.index) << "\n"
       << "monoid size:     " << r.monoid_size << "\n"
       << "idempotents:     " << r.idempotents << "\n"
       << "group H-classes: " << r.group_h_classes << " (largest " << r.max_group_order
       << ")\n"
       << "normal:          " << flag(r.normal) << "\n"
       << "malnormal:       " << flag(r.malnormal) << " (idempotents "
       << flag(r.malnormal_by_idempotents) << ", product " << flag(r.malnormal_by_product)
       << ")\n"
       << "cyclonormal:     " << flag(r.cyclonormal) << "\n"
       << "pure:            " << flag(r.pure) << " (H-classes " << flag(r.pure_by_h_classes)
       << ", powers " << flag(r.pure_by_powers) << ")\n";
    if (r.E_size) {
      os << "|E|:             " << *r.E_size << "\n"
         << "k:               " << *r.k << "\n";
    }
    if (r.bounds) {
      os << "cyclonormal bounds hold: " << flag(r.bounds->satisfied) << "\n";
    }
    for (auto const& [k, value] : r.Bk) {
      os << "B" << k << " bar:          " << flag(value) << "\n";
    }
    for (auto const& [pi, value] : r.Gpi) {
      os << "G" << pi_string(pi) << " bar:     " << flag(value) << "\n";
    }
    if (!r.inconsistencies.empty()) {
      os << "INCONSISTENT:";
      for (auto const& s : r.inconsistencies) {
        os << " " << s;
      }
      os << "\n";
    }
    return os.str();
  }

  std::string report_json(PropertyReport const& r) {
    json j;
    j["schema"]      = kReportSchema;
    j["states"]      = r.state_count;
    j["edges"]       = r.edge_count;
    j["rank"]        = r.rank;
    j["index"]       = r.index ? json(*r.index) : json("infinite");
    j["trivial"]     = r.trivial;
    j["whole_group"] = r.whole_group;
    j["monoid"]      = {{"size", r.monoid_size},
                        {"idempotents", r.idempotents},
                        {"group_h_classes", r.group_h_classes},
                        {"max_group_order", r.max_group_order}};
    j["normal"]      = r.normal;
    j["malnormal"]   = r.malnormal;
    j["cyclonormal"] = r.cyclonormal;
    j["pure"]        = r.pure;
    j["E"]           = r.E_size ? json(*r.E_size) : json(nullptr);
    j["k"]           = r.k ? json(*r.k) : json(nullptr);
    if (r.bounds) {
      j["cyclonormal_bounds"] = {{"k", r.bounds->k},
                                 {"E", r.bounds->E},
                                 {"satisfied", r.bounds->satisfied}};
    } else {
      j["cyclonormal_bounds"] = nullptr;
    }
    j["cross_checks"] = {{"malnormal_by_idempotents", r.malnormal_by_idempotents},
                         {"malnormal_by_product", r.malnormal_by_product},
                         {"pure_by_h_classes", r.pure_by_h_classes},
                         {"pure_by_powers", r.pure_by_powers}};
    j["Bk_bar"] = json::array();
    for (auto const& [k, value] : r.Bk) {
      j["Bk_bar"].push_back({{"k", k}, {"value", value}});
    }
    j["Gpi_bar"] = json::array();
    for (auto const& [pi, value] : r.Gpi) {
      j["Gpi_bar"].push_back({{"pi", pi}, {"value", value}});
    }
    j["inconsistencies"] = r.inconsistencies;
    return j.dump(2) + "\n";
  }

  namespace {
    std::string witness_string(TransitionMonoid const& m, std::size_t i, Alphabet const& a) {
      return to_string(m.witness(i), a);
    }
  }  // namespace

  std::string monoid_text(InverseAutomaton const& aut, TransitionMonoid const& m) {
    std::ostringstream os;
    os << "elements: " << m.size() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << "  " << i << "  [" << witness_string(m, i, aut.alphabet()) << "]  "
         << to_string(m.element(i)) << (m.element(i).is_idempotent() ? "  (idempotent)" : "")
         << "\n";
    }
    auto g = green_classes(m);
    os << "R-classes: " << g.R.size() << "\n"
       << "L-classes: " << g.L.size() << "\n"
       << "H-classes: " << g.H.size() << "\n"
       << "D-classes: " << g.D.size() << "\n";
    auto groups = group_H_classes(m);
    os << "group H-classes: " << groups.size() << "\n";
    for (auto const& h : groups) {
      os << "  idempotent " << h.identity << ", size " << h.members.size() << ", orders";
      for (std::size_t o : h.orders) {
        os << " " << o;
      }
      os << "\n";
    }
    if (!aut.trivial()) {
      auto p = idempotent_poset(aut, m);
      os << "E (reduced-realizable idempotents): " << p.E.size() << "\n";
      for (auto const& e : p.E) {
        os << "  " << to_string(e) << "\n";
      }
      os << "k: " << p.k << "\n";
    }
    return os.str();
  }

  std::string monoid_json(InverseAutomaton const& aut, TransitionMonoid const& m) {
    json j;
    j["schema"]   = "stallings-monoid/1";
    j["size"]     = m.size();
    j["elements"] = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json image = json::array();
      for (State r : m.element(i).images()) {
        image.push_back(r == kNoState ? json(nullptr) : json(r));
      }
      j["elements"].push_back({{"witness", witness_string(m, i, aut.alphabet())},
                               {"image", image},
                               {"idempotent", m.element(i).is_idempotent()}});
    }
    auto g     = green_classes(m);
    j["green"] = {{"R", g.R}, {"L", g.L}, {"H", g.H}, {"D", g.D}};
    j["group_h_classes"] = json::array();
    for (auto const& h : group_H_classes(m)) {
      j["group_h_classes"].push_back(
          {{"identity", h.identity}, {"members", h.members}, {"orders", h.orders}});
    }
    if (!aut.trivial()) {
      auto p        = idempotent_poset(aut, m);
      json E        = json::array();
      for (auto const& e : p.E) {
        E.push_back(e.domain());
      }
      j["E_domains"] = E;
      j["k"]         = p.k;
    } else {
      j["E_domains"] = nullptr;
      j["k"]         = nullptr;
    }
    return j.dump(2) + "\n";
  }

}  // namespace stallings
