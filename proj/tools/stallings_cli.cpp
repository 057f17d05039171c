// Command-line front end.  Exit codes: 0 ok, 2 parse error, 3 invariant or
// precondition violation, 4 monoid cap exceeded, 1 anything else.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "stallings/analysis.hpp"
#include "stallings/automaton.hpp"
#include "stallings/errors.hpp"
#include "stallings/freegroup.hpp"
#include "stallings/io.hpp"
#include "stallings/monoid.hpp"

using namespace stallings;

namespace {

  enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kInvariant = 3, kCap = 4 };

  // An argument starting with '{' is inline JSON, "-" is standard input,
  // anything else is a path.
  std::string read_input(std::string const& arg) {
    if (!arg.empty() && arg.front() == '{') {
      return arg;
    }
    std::ostringstream ss;
    if (arg == "-") {
      ss << std::cin.rdbuf();
      return ss.str();
    }
    std::ifstream in(arg);
    if (!in) {
      throw std::runtime_error("cannot open " + arg);
    }
    ss << in.rdbuf();
    return ss.str();
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw std::runtime_error("cannot write " + path);
    }
    out << text;
  }

  // Runs f, turning library exceptions into a message on err and an exit
  // code.
  template <typename F>
  int guarded(std::ostream& err, std::string const& context, F&& f) {
    std::string prefix = context.empty() ? "" : context + ": ";
    try {
      f();
      return kOk;
    } catch (ParseError const& e) {
      err << prefix << "parse error";
      if (e.line() != 0) {
        err << " at line " << e.line() << ", column " << e.column();
      } else {
        err << " at column " << e.column();
      }
      err << ": " << e.what() << "\n";
      return kParse;
    } catch (CapExceeded const& e) {
      err << prefix << e.what() << " (raise it with --monoid-cap)\n";
      return kCap;
    } catch (InvariantError const& e) {
      err << prefix << "invariant violation: " << e.what() << "\n";
      return kInvariant;
    } catch (PreconditionError const& e) {
      err << prefix << "precondition violation: " << e.what() << "\n";
      return kInvariant;
    } catch (std::exception const& e) {
      err << prefix << "error: " << e.what() << "\n";
      return kOther;
    }
  }

  std::vector<unsigned> parse_prime_set(std::string const& text) {
    std::vector<unsigned> out;
    std::stringstream     ss(text);
    std::string           item;
    std::size_t           column = 1;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        unsigned long p  = std::stoul(item, &used);
        if (used != item.size()) {
          throw std::invalid_argument(item);
        }
        out.push_back(static_cast<unsigned>(p));
      } catch (std::logic_error const&) {
        throw ParseError("malformed prime \"" + item + "\" in --pi", column);
      }
      column += item.size() + 1;
    }
    return out;
  }

  EndomorphismSpec read_endo(Alphabet const& alphabet,
                             std::string const& spec,
                             std::string const& file) {
    if (!file.empty()) {
      auto e = parse_endomorphism_file(read_input(file));
      if (!(e.alphabet() == alphabet)) {
        throw InvariantError("endomorphism alphabet differs from the subgroup alphabet");
      }
      return e;
    }
    auto steps = parse_nielsen(spec, alphabet);
    return nielsen_sequence(alphabet, steps);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stallings automata of subgroups of free groups"};
  app.require_subcommand(1);

  std::string output;
  std::size_t monoid_cap = kDefaultMonoidCap;
  std::string format     = "text";

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "Output path (default: stdout)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--monoid-cap", monoid_cap, "Maximum transition monoid size")
        ->check(CLI::PositiveNumber);
  };

  std::string input, input2, word, endo, endo_file, alphabet_names;

  auto* build = app.add_subcommand("build", "Build S(K) and write an automaton file");
  build->add_option("input", input, "Subgroup or automaton file (path, '-' or inline JSON)")
      ->required();
  add_output(build);

  std::vector<std::string> inputs;
  std::vector<std::size_t> k_values;
  std::vector<std::string> pi_texts;
  int                      jobs = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report subgroup properties");
  analyze_cmd->add_option("inputs", inputs, "Subgroup or automaton files")->required();
  analyze_cmd->add_option("--k", k_values, "Exponents k for the B_k test (comma separated)")
      ->delimiter(',');
  analyze_cmd->add_option("--pi", pi_texts, "Prime set for the G_pi test, e.g. 2,3 (repeatable)");
  analyze_cmd->add_option("--jobs", jobs, "Files analyzed in parallel")->check(CLI::PositiveNumber);
  add_cap(analyze_cmd);
  add_format(analyze_cmd);
  add_output(analyze_cmd);

  auto* apply = app.add_subcommand("apply", "Write S(K phi) for an endomorphism phi");
  apply->add_option("input", input, "Subgroup or automaton file")->required();
  auto* endo_opt = apply->add_option("--endo", endo, "Nielsen sequence, e.g. \"beta a b; alpha c\"");
  apply->add_option("--endo-file", endo_file, "Endomorphism file")->excludes(endo_opt);
  add_output(apply);

  auto* dot = app.add_subcommand("dot", "Export S(K) as Graphviz DOT");
  dot->add_option("input", input, "Subgroup or automaton file")->required();
  add_output(dot);

  auto* member = app.add_subcommand("member", "Decide whether a word lies in K");
  member->add_option("input", input, "Subgroup or automaton file")->required();
  member->add_option("word", word, "Word")->required();

  auto* index_cmd = app.add_subcommand("index", "Print the index of K in F_A");
  index_cmd->add_option("input", input, "Subgroup or automaton file")->required();

  auto* conjugate = app.add_subcommand("conjugate", "Write S(w K w^-1)");
  conjugate->add_option("input", input, "Subgroup or automaton file")->required();
  conjugate->add_option("word", word, "Conjugating word w")->required();
  add_output(conjugate);

  auto* intersect_cmd = app.add_subcommand("intersect", "Write S(H n K)");
  intersect_cmd->add_option("first", input, "H")->required();
  intersect_cmd->add_option("second", input2, "K")->required();
  add_output(intersect_cmd);

  auto* conjugacy = app.add_subcommand("conjugacy-test", "Decide whether H and K are conjugate");
  conjugacy->add_option("first", input, "H")->required();
  conjugacy->add_option("second", input2, "K")->required();

  auto* monoid = app.add_subcommand("monoid", "List M(K), Green's classes and idempotents");
  monoid->add_option("input", input, "Subgroup or automaton file")->required();
  add_cap(monoid);
  add_format(monoid);
  add_output(monoid);

  std::vector<std::string> identities;
  std::string              variables;
  auto* ident = app.add_subcommand("identities", "Check group identities in M(K) (finite index)");
  ident->add_option("input", input, "Subgroup or automaton file")->required();
  ident->add_option("--variables", variables, "Variable names, comma separated")->required();
  ident->add_option("identity", identities, "Identity words over the variables")->required();
  add_cap(ident);

  auto* is_auto = app.add_subcommand("is-automorphism", "Decide whether an endomorphism is onto");
  auto* auto_endo = is_auto->add_option("--endo", endo, "Nielsen sequence");
  is_auto->add_option("--alphabet", alphabet_names, "Generator names for --endo, comma separated")
      ->needs(auto_endo);
  is_auto->add_option("--endo-file", endo_file, "Endomorphism file")->excludes(auto_endo);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  auto split = [](std::string const& text) {
    std::vector<std::string> out;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      out.push_back(item);
    }
    return out;
  };

  if (*analyze_cmd) {
    AnalysisOptions options;
    options.k_values   = k_values;
    options.monoid_cap = monoid_cap;
    int code = guarded(std::cerr, "", [&] {
      for (auto const& t : pi_texts) {
        options.pi_sets.push_back(parse_prime_set(t));
      }
    });
    if (code != kOk) {
      return code;
    }
    std::vector<std::string> outputs(inputs.size()), errors(inputs.size());
    std::vector<int>         codes(inputs.size(), kOk);
    omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inputs.size()); ++i) {
      std::ostringstream err;
      codes[i] = guarded(err, inputs.size() > 1 ? inputs[i] : "", [&] {
        auto report = analyze(load_subgroup(read_input(inputs[i])), options);
        outputs[i]  = format == "json" ? report_json(report) : report_text(report);
        if (!report.inconsistencies.empty()) {
          err << inputs[i] << ": inconsistent cross-checks\n";
        }
      });
      errors[i] = err.str();
    }
    std::string text;
    int         worst = kOk;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::cerr << errors[i];
      worst = std::max(worst, codes[i]);
      if (codes[i] != kOk) {
        continue;
      }
      if (inputs.size() > 1 && format == "text") {
        text += "# " + inputs[i] + "\n";
      }
      text += outputs[i];
    }
    int write_code = guarded(std::cerr, "", [&] { write_output(output, text); });
    return std::max(worst, write_code);
  }

  return guarded(std::cerr, "", [&] {
    if (*build) {
      write_output(output, write_automaton_file(load_subgroup(read_input(input))));
    } else if (*apply) {
      auto aut = load_subgroup(read_input(input));
      if (endo.empty() && endo_file.empty()) {
        throw PreconditionError("apply needs --endo or --endo-file");
      }
      auto e = read_endo(aut.alphabet(), endo, endo_file);
      write_output(output, write_automaton_file(apply_endo_to_subgroup(aut, e)));
    } else if (*dot) {
      write_output(output, to_dot(load_subgroup(read_input(input))));
    } else if (*member) {
      auto aut = load_subgroup(read_input(input));
      std::cout << (stallings::member(aut, parse_word(word, aut.alphabet())) ? "true" : "false")
                << "\n";
    } else if (*index_cmd) {
      auto i = index(load_subgroup(read_input(input)));
      std::cout << (i ? std::to_string(*i) : "infinite") << "\n";
    } else if (*conjugate) {
      auto aut = load_subgroup(read_input(input));
      auto w   = free_reduce(parse_word(word, aut.alphabet()));
      write_output(output, write_automaton_file(conjugate_subgroup(aut, w)));
    } else if (*intersect_cmd) {
      auto h = load_subgroup(read_input(input));
      auto k = load_subgroup(read_input(input2));
      write_output(output, write_automaton_file(intersect(h, k)));
    } else if (*conjugacy) {
      auto h = load_subgroup(read_input(input));
      auto k = load_subgroup(read_input(input2));
      if (!(h.alphabet() == k.alphabet())) {
        throw InvariantError("subgroups over different alphabets");
      }
      auto w = conjugator(h, k);
      std::cout << "conjugate: " << (w ? "true" : "false") << "\n";
      if (w) {
        // w^-1 H w = K
        std::cout << "conjugator: " << to_string(*w, h.alphabet()) << "\n";
      }
    } else if (*monoid) {
      auto aut = load_subgroup(read_input(input));
      auto m   = generate_monoid(aut, monoid_cap);
      write_output(output, format == "json" ? monoid_json(aut, m) : monoid_text(aut, m));
    } else if (*ident) {
      auto     aut = load_subgroup(read_input(input));
      Alphabet vars(split(variables));
      if (vars.size() > 3) {
        std::cerr << "warning: " << vars.size()
                  << " variables; the check enumerates |M(K)|^" << vars.size()
                  << " assignments\n";
      }
      std::vector<Word> words;
      for (auto const& u : identities) {
        words.push_back(parse_word(u, vars));
      }
      bool ok = satisfies_group_identities(aut, words, vars.size(), monoid_cap);
      std::cout << (ok ? "true" : "false") << "\n";
    } else if (*is_auto) {
      EndomorphismSpec e;
      if (!endo_file.empty()) {
        e = parse_endomorphism_file(read_input(endo_file));
      } else if (!endo.empty()) {
        if (alphabet_names.empty()) {
          throw PreconditionError("--endo needs --alphabet");
        }
        Alphabet a(split(alphabet_names));
        e = nielsen_sequence(a, parse_nielsen(endo, a));
      } else {
        throw PreconditionError("is-automorphism needs --endo or --endo-file");
      }
      std::cout << (is_automorphism(e) ? "true" : "false") << "\n";
    }
  });
}
