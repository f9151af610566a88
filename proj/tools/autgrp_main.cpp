// Command line front end for libautgrp; talks to the core exclusively
// through the C interface in autgrp.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "autgrp.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { ag_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(ag_group* g) const { ag_group_free(g); }
};
struct AutomatonDeleter {
  void operator()(ag_automaton* a) const { ag_automaton_free(a); }
};
struct ComplexDeleter {
  void operator()(ag_complex* c) const { ag_complex_free(c); }
};
struct WordDeleter {
  void operator()(ag_word* w) const { ag_word_free(w); }
};
using GroupPtr = std::unique_ptr<ag_group, GroupDeleter>;
using AutomatonPtr = std::unique_ptr<ag_automaton, AutomatonDeleter>;
using ComplexPtr = std::unique_ptr<ag_complex, ComplexDeleter>;
using WordPtr = std::unique_ptr<ag_word, WordDeleter>;

[[noreturn]] void usage_fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(2);
}

void check(int rc, const char* what) {
  if (rc != AG_OK) {
    usage_fail(std::string(what) + ": " + ag_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_fail("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) usage_fail("cannot write '" + out_path + "'");
    out << text;
  }
}

GroupPtr parse_group(const std::string& spec) {
  ag_group* g = nullptr;
  check(ag_group_parse(spec.c_str(), &g), "group spec");
  return GroupPtr(g);
}

AutomatonPtr load_automaton(const std::string& group_spec,
                            const std::string& automaton_path,
                            const std::string& cayley_path = "") {
  int sources = static_cast<int>(!group_spec.empty()) +
                static_cast<int>(!automaton_path.empty()) +
                static_cast<int>(!cayley_path.empty());
  if (sources != 1) {
    usage_fail("give exactly one of --group, --automaton, --cayley");
  }
  ag_automaton* a = nullptr;
  if (!group_spec.empty()) {
    GroupPtr g = parse_group(group_spec);
    check(ag_automaton_build_abelian(g.get(), &a), "build automaton");
  } else if (!automaton_path.empty()) {
    check(ag_automaton_from_json(read_file(automaton_path).c_str(), &a),
          "load automaton");
  } else {
    check(ag_automaton_from_cayley_json(read_file(cayley_path).c_str(), &a),
          "load Cayley table");
  }
  return AutomatonPtr(a);
}

std::string automaton_text(const ag_automaton* a, const std::string& format) {
  char* text = nullptr;
  if (format == "dot") {
    check(ag_automaton_to_dot(a, &text), "render automaton");
  } else {
    check(ag_automaton_to_json(a, &text), "render automaton");
  }
  OwnedString owned(text);
  return owned.get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automaton groups over finite abelian groups"};
  app.require_subcommand(1);

  std::string group_spec, automaton_path, cayley_path, out_path, word_text;
  std::string state_label, emit_kind = "automaton.json", format = "json";
  bool check_complete = false, as_json = false, timings = false;
  int depth = 3, word_len = 6, samples = 500;
  std::uint64_t seed = 0, cap = 0;
  if (const char* env_seed = std::getenv("AUTGRP_SEED")) {
    seed = std::strtoull(env_seed, nullptr, 10);
  }

  auto* build = app.add_subcommand("build", "construct an automaton or complex");
  build->add_option("--group", group_spec, "abelian group spec, e.g. Z3 or Z2xZ4");
  build->add_option("--cayley", cayley_path, "JSON multiplication table");
  build->add_option("--emit", emit_kind,
                    "automaton.json | complex.json | dot | complex.dot | squares.dot");
  build->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* act = app.add_subcommand("act", "apply a state transformation to a word");
  act->add_option("--group", group_spec)->required();
  act->add_option("--state", state_label, "state label, e.g. a1")->required();
  act->add_option("--word", word_text, "comma separated letters")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual automaton");
  auto* invert_cmd = app.add_subcommand("invert", "inverse automaton");
  auto* minimize_cmd = app.add_subcommand("minimize", "behavioural quotient");
  for (auto* cmd : {dual_cmd, invert_cmd, minimize_cmd}) {
    cmd->add_option("--group", group_spec);
    cmd->add_option("--automaton", automaton_path, "automaton JSON file");
    cmd->add_option("--cayley", cayley_path, "JSON multiplication table");
    cmd->add_option("--format", format, "json | dot");
    cmd->add_option("-o,--output", out_path);
  }

  auto* complex_cmd = app.add_subcommand("complex", "square complex of A_X");
  complex_cmd->add_option("--group", group_spec)->required();
  complex_cmd->add_flag("--check-complete", check_complete,
                        "exit 1 with a witness if the complex is incomplete");
  complex_cmd->add_option("--format", format, "json | dot | squares.dot");
  complex_cmd->add_option("-o,--output", out_path);

  auto* pres = app.add_subcommand("presentation",
                                  "fundamental group presentation of the complex");
  pres->add_option("--group", group_spec)->required();
  pres->add_flag("--json", as_json, "JSON instead of plain text");
  pres->add_option("-o,--output", out_path);

  auto* nf = app.add_subcommand("normalform", "lamplighter normal form of a word");
  nf->add_option("--group", group_spec)->required();
  nf->add_option("--word", word_text, "word over the states, e.g. \"a1 a2 a0^-1\"")
      ->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--group", group_spec)->required();
  verify->add_option("--depth", depth, "orbit depth (default 3)");
  verify->add_option("--word-len", word_len, "sampled word length (default 6)");
  verify->add_option("--samples", samples, "sample count (default 500)");
  verify->add_option("--seed", seed, "RNG seed (default from AUTGRP_SEED or 1729)");
  verify->add_option("--cap", cap, "section closure cap (default 1000000)");
  verify->add_flag("--timings", timings, "include wall times in the report");

  auto* cayley =
      app.add_subcommand("cayley", "build from a Cayley table and report");
  cayley->add_option("table", cayley_path, "JSON multiplication table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (build->parsed()) {
    if (emit_kind == "automaton.json" || emit_kind == "dot") {
      AutomatonPtr a = load_automaton(group_spec, "", cayley_path);
      emit(automaton_text(a.get(), emit_kind == "dot" ? "dot" : "json"), out_path);
    } else if (emit_kind == "complex.json" || emit_kind == "complex.dot" ||
               emit_kind == "squares.dot") {
      if (group_spec.empty()) usage_fail("complex emission needs --group");
      GroupPtr g = parse_group(group_spec);
      ag_complex* c = nullptr;
      check(ag_complex_build_abelian(g.get(), &c), "build complex");
      ComplexPtr owned(c);
      char* text = nullptr;
      if (emit_kind == "complex.dot") {
        check(ag_complex_to_dot(c, &text), "render complex");
      } else if (emit_kind == "squares.dot") {
        check(ag_complex_squares_dot(c, &text), "render complex");
      } else {
        check(ag_complex_to_json(c, &text), "render complex");
      }
      OwnedString s(text);
      emit(s.get(), out_path);
    } else {
      usage_fail("unknown --emit kind '" + emit_kind + "'");
    }
    return 0;
  }

  if (act->parsed()) {
    AutomatonPtr a = load_automaton(group_spec, "");
    char* image = nullptr;
    check(ag_automaton_act(a.get(), state_label.c_str(), word_text.c_str(), &image),
          "act");
    OwnedString s(image);
    std::cout << s.get() << "\n";
    return 0;
  }

  for (auto* cmd : {dual_cmd, invert_cmd, minimize_cmd}) {
    if (!cmd->parsed()) continue;
    AutomatonPtr a = load_automaton(group_spec, automaton_path, cayley_path);
    ag_automaton* result = nullptr;
    if (cmd == dual_cmd) {
      check(ag_automaton_dual(a.get(), &result), "dual");
    } else if (cmd == invert_cmd) {
      check(ag_automaton_inverse(a.get(), &result), "invert");
    } else {
      char* map_json = nullptr;
      check(ag_automaton_minimize(a.get(), &result, &map_json), "minimize");
      OwnedString map(map_json);
      std::cerr << "state map: " << map.get() << "\n";
    }
    AutomatonPtr owned(result);
    emit(automaton_text(result, format), out_path);
    return 0;
  }

  if (complex_cmd->parsed()) {
    GroupPtr g = parse_group(group_spec);
    ag_complex* c = nullptr;
    check(ag_complex_build_abelian(g.get(), &c), "build complex");
    ComplexPtr owned(c);
    if (check_complete) {
      int complete = 0;
      char* witness = nullptr;
      check(ag_complex_is_complete(c, &complete, &witness), "completeness");
      OwnedString s(witness);
      std::cout << s.get() << "\n";
      return complete ? 0 : 1;
    }
    char* text = nullptr;
    if (format == "dot") {
      check(ag_complex_to_dot(c, &text), "render complex");
    } else if (format == "squares.dot") {
      check(ag_complex_squares_dot(c, &text), "render complex");
    } else {
      check(ag_complex_to_json(c, &text), "render complex");
    }
    OwnedString s(text);
    emit(s.get(), out_path);
    return 0;
  }

  if (pres->parsed()) {
    GroupPtr g = parse_group(group_spec);
    ag_complex* c = nullptr;
    check(ag_complex_build_abelian(g.get(), &c), "build complex");
    ComplexPtr owned(c);
    char* text = nullptr;
    if (as_json) {
      check(ag_presentation_json(c, &text), "presentation");
    } else {
      check(ag_presentation_text(c, &text), "presentation");
    }
    OwnedString s(text);
    emit(s.get(), out_path);
    return 0;
  }

  if (nf->parsed()) {
    AutomatonPtr a = load_automaton(group_spec, "");
    ag_word* w = nullptr;
    check(ag_word_parse(a.get(), word_text.c_str(), &w), "word");
    WordPtr owned(w);
    char* json = nullptr;
    check(ag_word_normal_form(w, &json), "normal form");
    OwnedString s(json);
    std::cout << s.get() << "\n";
    return 0;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int all_passed = 0;
    check(ag_verify(group_spec.c_str(), depth, word_len, samples, seed, cap,
                    timings ? 1 : 0, &report, &all_passed),
          "verify");
    OwnedString s(report);
    std::cout << s.get() << "\n";
    return all_passed ? 0 : 1;
  }

  if (cayley->parsed()) {
    char* report = nullptr;
    check(ag_cayley_report(read_file(cayley_path).c_str(), &report), "cayley");
    OwnedString s(report);
    std::cout << s.get() << "\n";
    return 0;
  }

  return 2;
}
