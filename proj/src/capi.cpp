#include "autgrp.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "autgrp/abelian.hpp"
#include "autgrp/constructions.hpp"
#include "autgrp/lamplighter.hpp"
#include "autgrp/mealy.hpp"
#include "autgrp/square_complex.hpp"
#include "autgrp/verify.hpp"
#include "autgrp/words.hpp"

struct ag_group {
  std::shared_ptr<const autgrp::FiniteAbelianGroup> g;
};
struct ag_automaton {
  autgrp::AutomatonPtr a;
};
struct ag_complex {
  std::shared_ptr<const autgrp::SquareComplex> c;
};
struct ag_word {
  autgrp::GroupWord w;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& fn) {
  try {
    g_last_error.clear();
    fn();
    return AG_OK;
  } catch (const autgrp::undecided_error& e) {
    g_last_error = e.what();
    return AG_EUNDECIDED;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return AG_EPARSE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return AG_EDOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return AG_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AG_EINTERNAL;
  }
}

int require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return AG_EINVAL;
  }
  return AG_OK;
}

}  // namespace

extern "C" {

const char* ag_version(void) { return "0.1.0"; }

const char* ag_last_error(void) { return g_last_error.c_str(); }

void ag_string_free(char* s) { std::free(s); }

int ag_group_parse(const char* spec, ag_group** out) {
  if (int rc = require(spec && out, "null argument")) return rc;
  return guarded([&] {
    auto g = std::make_shared<autgrp::FiniteAbelianGroup>(
        autgrp::FiniteAbelianGroup::parse(spec));
    *out = new ag_group{std::move(g)};
  });
}

void ag_group_free(ag_group* g) { delete g; }

int ag_group_order(const ag_group* g, int64_t* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  *out = g->g->order();
  return AG_OK;
}

int ag_group_exponent(const ag_group* g, int64_t* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  *out = g->g->exponent();
  return AG_OK;
}

int ag_group_all_square_roots(const ag_group* g, int* out) {
  if (int rc = require(g && out, "null argument")) return rc;
  *out = g->g->all_elements_have_square_roots() ? 1 : 0;
  return AG_OK;
}

int ag_group_describe_json(const ag_group* g, char** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] {
    nlohmann::ordered_json j;
    j["spec"] = g->g->spec_string();
    j["moduli"] = g->g->moduli();
    j["order"] = g->g->order();
    j["exponent"] = g->g->exponent();
    j["all_square_roots"] = g->g->all_elements_have_square_roots();
    auto elements = nlohmann::ordered_json::array();
    for (int i = 0; i < g->g->order(); ++i) elements.push_back(g->g->label(i));
    j["elements"] = std::move(elements);
    *out = dup_string(j.dump(2));
  });
}

int ag_automaton_build_abelian(const ag_group* g, ag_automaton** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_automaton{autgrp::build_automaton_abelian(g->g)};
  });
}

int ag_automaton_from_json(const char* json, ag_automaton** out) {
  if (int rc = require(json && out, "null argument")) return rc;
  return guarded([&] {
    auto a = std::make_shared<autgrp::MealyAutomaton>(
        autgrp::automaton_from_json(nlohmann::json::parse(json)));
    *out = new ag_automaton{std::move(a)};
  });
}

int ag_automaton_from_cayley_json(const char* json, ag_automaton** out) {
  if (int rc = require(json && out, "null argument")) return rc;
  return guarded([&] {
    autgrp::CayleyGroup y =
        autgrp::CayleyGroup::from_json(nlohmann::json::parse(json));
    *out = new ag_automaton{autgrp::build_automaton_group(y)};
  });
}

void ag_automaton_free(ag_automaton* a) { delete a; }

int ag_automaton_state_count(const ag_automaton* a, int64_t* out) {
  if (int rc = require(a && out, "null argument")) return rc;
  *out = a->a->state_count();
  return AG_OK;
}

int ag_automaton_alphabet_size(const ag_automaton* a, int64_t* out) {
  if (int rc = require(a && out, "null argument")) return rc;
  *out = a->a->alphabet_size();
  return AG_OK;
}

int ag_automaton_to_json(const ag_automaton* a, char** out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(autgrp::automaton_to_json(*a->a).dump(2)); });
}

int ag_automaton_to_dot(const ag_automaton* a, char** out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(autgrp::automaton_to_dot(*a->a)); });
}

int ag_automaton_is_permutational(const ag_automaton* a, int* out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] { *out = autgrp::is_permutational(*a->a) ? 1 : 0; });
}

int ag_automaton_is_reversible(const ag_automaton* a, int* out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] { *out = autgrp::is_reversible(*a->a) ? 1 : 0; });
}

int ag_automaton_is_bireversible(const ag_automaton* a, int* out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] { *out = autgrp::is_bireversible(*a->a) ? 1 : 0; });
}

int ag_automaton_dual(const ag_automaton* a, ag_automaton** out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_automaton{
        std::make_shared<autgrp::MealyAutomaton>(autgrp::dual(*a->a))};
  });
}

int ag_automaton_inverse(const ag_automaton* a, ag_automaton** out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_automaton{
        std::make_shared<autgrp::MealyAutomaton>(autgrp::inverse(*a->a))};
  });
}

int ag_automaton_minimize(const ag_automaton* a, ag_automaton** out,
                          char** state_map_json) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] {
    autgrp::MinimizationResult r = autgrp::minimize(*a->a);
    if (state_map_json) {
      nlohmann::ordered_json map;
      for (int s = 0; s < a->a->state_count(); ++s) {
        map[a->a->state_labels[static_cast<size_t>(s)]] =
            r.quotient.state_labels[static_cast<size_t>(
                r.state_map[static_cast<size_t>(s)])];
      }
      *state_map_json = dup_string(map.dump(2));
    }
    *out = new ag_automaton{
        std::make_shared<autgrp::MealyAutomaton>(std::move(r.quotient))};
  });
}

int ag_automaton_act(const ag_automaton* a, const char* state,
                     const char* word, char** out) {
  if (int rc = require(a && state && word && out, "null argument")) return rc;
  return guarded([&] {
    auto q = a->a->state_index(state);
    if (!q) throw std::invalid_argument("unknown state '" + std::string(state) + "'");
    std::vector<int> letters;
    std::string token;
    for (const char* p = word;; ++p) {
      if (*p == '\0' || *p == ',' || *p == ' ') {
        if (!token.empty()) {
          auto x = a->a->letter_index(token);
          if (!x) {
            throw std::invalid_argument("unknown letter '" + token + "'");
          }
          letters.push_back(*x);
          token.clear();
        }
        if (*p == '\0') break;
      } else {
        token.push_back(*p);
      }
    }
    std::vector<int> image = autgrp::act(*a->a, *q, letters);
    std::string text;
    for (size_t i = 0; i < image.size(); ++i) {
      if (i) text.push_back(',');
      text += a->a->letter_labels[static_cast<size_t>(image[i])];
    }
    *out = dup_string(text);
  });
}

int ag_complex_build_abelian(const ag_group* g, ag_complex** out) {
  if (int rc = require(g && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_complex{std::make_shared<autgrp::SquareComplex>(
        autgrp::build_complex_abelian(*g->g))};
  });
}

int ag_complex_from_automaton(const ag_automaton* a, ag_complex** out) {
  if (int rc = require(a && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_complex{std::make_shared<autgrp::SquareComplex>(
        autgrp::complex_from_automaton(*a->a))};
  });
}

int ag_complex_from_json(const char* json, ag_complex** out) {
  if (int rc = require(json && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_complex{std::make_shared<autgrp::SquareComplex>(
        autgrp::complex_from_json(nlohmann::json::parse(json)))};
  });
}

int ag_complex_to_automaton(const ag_complex* c, ag_automaton** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_automaton{std::make_shared<autgrp::MealyAutomaton>(
        autgrp::automaton_from_complex(*c->c))};
  });
}

void ag_complex_free(ag_complex* c) { delete c; }

int ag_complex_to_json(const ag_complex* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(autgrp::complex_to_json(*c->c).dump(2)); });
}

int ag_complex_to_dot(const ag_complex* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(autgrp::complex_to_dot(*c->c)); });
}

int ag_complex_squares_dot(const ag_complex* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(autgrp::squares_to_dot(*c->c)); });
}

int ag_complex_is_complete(const ag_complex* c, int* complete,
                           char** witness_json) {
  if (int rc = require(c && complete, "null argument")) return rc;
  return guarded([&] {
    nlohmann::ordered_json status = autgrp::link_status_to_json(*c->c);
    *complete = status["complete"].get<bool>() ? 1 : 0;
    if (witness_json) *witness_json = dup_string(status.dump(2));
  });
}

int ag_complex_cell_census(const ag_complex* c, int64_t* zero_cells,
                           int64_t* oriented_one_cells, int64_t* two_cells) {
  if (int rc = require(c && zero_cells && oriented_one_cells && two_cells,
                       "null argument")) {
    return rc;
  }
  return guarded([&] {
    autgrp::CellCensus census = autgrp::cell_census(*c->c);
    *zero_cells = census.zero_cells;
    *oriented_one_cells = census.oriented_one_cells;
    *two_cells = census.two_cells;
  });
}

int ag_presentation_text(const ag_complex* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(
        autgrp::presentation_to_text(autgrp::fundamental_presentation(*c->c)));
  });
}

int ag_presentation_json(const ag_complex* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] {
    *out = dup_string(
        autgrp::presentation_to_json(autgrp::fundamental_presentation(*c->c))
            .dump(2));
  });
}

int ag_word_parse(const ag_automaton* a, const char* text, ag_word** out) {
  if (int rc = require(a && text && out, "null argument")) return rc;
  return guarded([&] {
    *out = new ag_word{autgrp::GroupWord::parse(a->a, text)};
  });
}

void ag_word_free(ag_word* w) { delete w; }

int ag_word_to_string(const ag_word* w, char** out) {
  if (int rc = require(w && out, "null argument")) return rc;
  return guarded([&] { *out = dup_string(w->w.str()); });
}

int ag_words_equal(const ag_word* u, const ag_word* v, uint64_t cap, int* out) {
  if (int rc = require(u && v && out, "null argument")) return rc;
  return guarded([&] {
    *out = autgrp::words_equal(u->w, v->w,
                               cap ? cap : autgrp::kDefaultSectionCap)
               ? 1
               : 0;
  });
}

int ag_word_is_constant_translation(const ag_word* w, uint64_t cap,
                                    int* is_member, char** letter_label) {
  if (int rc = require(w && is_member, "null argument")) return rc;
  return guarded([&] {
    auto k = autgrp::constant_translation(
        w->w, cap ? cap : autgrp::kDefaultSectionCap);
    *is_member = k ? 1 : 0;
    if (letter_label) {
      *letter_label =
          k ? dup_string(w->w.automaton()->letter_group->label(*k)) : nullptr;
    }
  });
}

int ag_word_normal_form(const ag_word* w, char** json_out) {
  if (int rc = require(w && json_out, "null argument")) return rc;
  return guarded([&] {
    const auto& group = w->w.automaton()->letter_group;
    autgrp::LamplighterElement p = autgrp::word_to_lamplighter(w->w);
    *json_out = dup_string(autgrp::lamplighter_to_json(*group, p).dump(2));
  });
}

int ag_word_from_normal_form(const ag_automaton* a, const char* json,
                             ag_word** out) {
  if (int rc = require(a && json && out, "null argument")) return rc;
  return guarded([&] {
    if (!a->a->letter_group) {
      throw std::domain_error("alphabet carries no group structure");
    }
    autgrp::LamplighterElement p = autgrp::lamplighter_from_json(
        *a->a->letter_group, nlohmann::json::parse(json));
    *out = new ag_word{autgrp::lamplighter_to_word(a->a, p)};
  });
}

int ag_check_self_duality(const ag_group* g, char** witness_json) {
  if (int rc = require(g != nullptr, "null argument")) return rc;
  return guarded([&] {
    autgrp::SelfDualityWitness w = autgrp::check_self_duality(*g->g);
    if (witness_json) {
      nlohmann::ordered_json j;
      auto phi = nlohmann::ordered_json::object();
      auto psi = nlohmann::ordered_json::object();
      for (int i = 0; i < g->g->order(); ++i) {
        phi["a" + g->g->label(i)] =
            g->g->label(w.state_map[static_cast<size_t>(i)]);
        psi[g->g->label(i)] =
            "a" + g->g->label(w.letter_map[static_cast<size_t>(i)]);
      }
      j["phi"] = std::move(phi);
      j["psi"] = std::move(psi);
      *witness_json = dup_string(j.dump(2));
    }
  });
}

int ag_verify(const char* group_spec, int depth, int word_len, int samples,
              uint64_t seed, uint64_t cap, int with_timings, char** report_json,
              int* all_passed) {
  if (int rc = require(group_spec && report_json && all_passed,
                       "null argument")) {
    return rc;
  }
  return guarded([&] {
    autgrp::VerifyOptions opt;
    if (depth > 0) opt.depth = depth;
    if (word_len > 0) opt.word_len = word_len;
    if (samples > 0) opt.samples = samples;
    if (seed != 0) opt.seed = seed;
    if (cap != 0) opt.section_cap = cap;
    autgrp::VerificationReport report = autgrp::verify_suite(group_spec, opt);
    *report_json = dup_string(report.to_json(with_timings != 0).dump(2));
    *all_passed = report.all_passed() ? 1 : 0;
  });
}

int ag_cayley_report(const char* cayley_json, char** report_json) {
  if (int rc = require(cayley_json && report_json, "null argument")) return rc;
  return guarded([&] {
    autgrp::CayleyGroup y =
        autgrp::CayleyGroup::from_json(nlohmann::json::parse(cayley_json));
    autgrp::AutomatonPtr a = autgrp::build_automaton_group(y);
    bool reversible = autgrp::is_reversible(*a);
    bool bireversible = autgrp::is_bireversible(*a);
    bool even = y.order() % 2 == 0;
    nlohmann::ordered_json j;
    j["order"] = y.order();
    j["states"] = a->state_count();
    j["permutational"] = autgrp::is_permutational(*a);
    j["reversible"] = reversible;
    j["bireversible"] = bireversible;
    j["parity"] = {{"order_even", even},
                   {"odd_order_rule_predicts_bireversible", !even},
                   {"even_order_rule_predicts_bireversible", even},
                   {"agrees_with_odd_order_rule", bireversible == !even},
                   {"agrees_with_even_order_rule", bireversible == even}};
    *report_json = dup_string(j.dump(2));
  });
}

}  // extern "C"
