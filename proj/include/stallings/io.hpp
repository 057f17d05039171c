// Text formats: subgroup, automaton and endomorphism files (JSON), DOT
// export, and text/JSON reports.
//
// Subgroup file:      {"alphabet": ["a","b"], "generators": ["a b", "b^2"]}
// Automaton file:     {"alphabet": [...], "states": n, "basepoint": q,
//                      "edges": [[source, "name", target], ...]}
// Endomorphism file:  {"alphabet": [...], "images": {"a": "a b", ...}}
//                     (generators not listed are fixed)
//
// All writers emit a fixed field order, so output is byte-stable.

#ifndef STALLINGS_IO_HPP_
#define STALLINGS_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "stallings/analysis.hpp"
#include "stallings/automaton.hpp"
#include "stallings/freegroup.hpp"
#include "stallings/monoid.hpp"

namespace stallings {

  inline constexpr char const* kReportSchema = "stallings-report/1";

  struct SubgroupFile {
    Alphabet          alphabet;
    std::vector<Word> generators;
  };

  // Parse errors carry 1-based line and column in text.
  SubgroupFile     parse_subgroup_file(std::string_view text);
  InverseAutomaton parse_automaton_file(std::string_view text);
  EndomorphismSpec parse_endomorphism_file(std::string_view text);

  // Accepts either a subgroup file or an automaton file and returns S(K).
  InverseAutomaton load_subgroup(std::string_view text);

  std::string write_subgroup_file(SubgroupFile const& f);
  std::string write_automaton_file(InverseAutomaton const& aut);

  std::string to_dot(InverseAutomaton const& aut);

  std::string report_text(PropertyReport const& r);
  std::string report_json(PropertyReport const& r);

  // Elements with witnesses, Green's class counts, group H-classes and the
  // idempotent poset.
  std::string monoid_text(InverseAutomaton const& aut, TransitionMonoid const& m);
  std::string monoid_json(InverseAutomaton const& aut, TransitionMonoid const& m);

}  // namespace stallings

#endif  // STALLINGS_IO_HPP_
