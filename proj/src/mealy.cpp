#include "autgrp/mealy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace autgrp {

namespace {

bool row_is_permutation(const std::vector<int>& row, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : row) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return static_cast<int>(row.size()) == n;
}

void check_unique(const std::vector<std::string>& labels, const char* kind) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument(std::string(kind) + " labels are not unique");
  }
}

}  // namespace

void MealyAutomaton::validate() const {
  const int q = state_count();
  const int n = alphabet_size();
  if (q == 0) throw std::invalid_argument("automaton has no states");
  if (n == 0) throw std::invalid_argument("automaton has empty alphabet");
  check_unique(state_labels, "state");
  check_unique(letter_labels, "letter");
  if (static_cast<int>(transition.size()) != q ||
      static_cast<int>(output.size()) != q) {
    throw std::invalid_argument("table row count does not match state count");
  }
  for (int i = 0; i < q; ++i) {
    if (static_cast<int>(transition[i].size()) != n ||
        static_cast<int>(output[i].size()) != n) {
      throw std::invalid_argument("table column count does not match alphabet");
    }
    for (int x = 0; x < n; ++x) {
      if (transition[i][x] < 0 || transition[i][x] >= q) {
        throw std::invalid_argument("transition entry out of range");
      }
      if (output[i][x] < 0 || output[i][x] >= n) {
        throw std::invalid_argument("output entry out of range");
      }
    }
  }
  if (letter_group && letter_group->order() != n) {
    throw std::invalid_argument("letter group order does not match alphabet");
  }
}

std::optional<int> MealyAutomaton::state_index(std::string_view label) const {
  for (int i = 0; i < state_count(); ++i) {
    if (state_labels[static_cast<size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

std::optional<int> MealyAutomaton::letter_index(std::string_view label) const {
  for (int i = 0; i < alphabet_size(); ++i) {
    if (letter_labels[static_cast<size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

bool is_permutational(const MealyAutomaton& a) {
  const int n = a.alphabet_size();
  return std::all_of(a.output.begin(), a.output.end(),
                     [n](const auto& row) { return row_is_permutation(row, n); });
}

void require_permutational(const MealyAutomaton& a) {
  if (!is_permutational(a)) {
    throw std::domain_error("automaton is not permutational");
  }
}

int extended_transition(const MealyAutomaton& a, int state,
                        std::span<const int> word) {
  int q = state;
  for (int x : word) {
    if (x < 0 || x >= a.alphabet_size()) {
      throw std::invalid_argument("letter outside the alphabet");
    }
    q = a.transition[static_cast<size_t>(q)][static_cast<size_t>(x)];
  }
  return q;
}

std::vector<int> act(const MealyAutomaton& a, int state,
                     std::span<const int> word) {
  std::vector<int> out;
  out.reserve(word.size());
  int q = state;
  for (int x : word) {
    if (x < 0 || x >= a.alphabet_size()) {
      throw std::invalid_argument("letter outside the alphabet");
    }
    out.push_back(a.output[static_cast<size_t>(q)][static_cast<size_t>(x)]);
    q = a.transition[static_cast<size_t>(q)][static_cast<size_t>(x)];
  }
  return out;
}

MealyAutomaton dual(const MealyAutomaton& a) {
  MealyAutomaton d;
  d.state_labels = a.letter_labels;
  d.letter_labels = a.state_labels;
  const int q = a.state_count();
  const int n = a.alphabet_size();
  d.transition.assign(static_cast<size_t>(n), std::vector<int>(q));
  d.output.assign(static_cast<size_t>(n), std::vector<int>(q));
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < q; ++s) {
      d.transition[static_cast<size_t>(x)][static_cast<size_t>(s)] =
          a.output[static_cast<size_t>(s)][static_cast<size_t>(x)];
      d.output[static_cast<size_t>(x)][static_cast<size_t>(s)] =
          a.transition[static_cast<size_t>(s)][static_cast<size_t>(x)];
    }
  }
  return d;
}

MealyAutomaton inverse(const MealyAutomaton& a) {
  require_permutational(a);
  MealyAutomaton inv;
  inv.state_labels = a.state_labels;
  inv.letter_labels = a.letter_labels;
  inv.letter_group = a.letter_group;
  const int q = a.state_count();
  const int n = a.alphabet_size();
  inv.transition.assign(static_cast<size_t>(q), std::vector<int>(n));
  inv.output.assign(static_cast<size_t>(q), std::vector<int>(n));
  for (int s = 0; s < q; ++s) {
    for (int x = 0; x < n; ++x) {
      int y = a.output[static_cast<size_t>(s)][static_cast<size_t>(x)];
      inv.output[static_cast<size_t>(s)][static_cast<size_t>(y)] = x;
      inv.transition[static_cast<size_t>(s)][static_cast<size_t>(y)] =
          a.transition[static_cast<size_t>(s)][static_cast<size_t>(x)];
    }
  }
  return inv;
}

bool is_reversible(const MealyAutomaton& a) {
  require_permutational(a);
  return is_permutational(dual(a));
}

bool is_bireversible(const MealyAutomaton& a) {
  if (!is_reversible(a)) return false;
  return is_permutational(dual(inverse(a)));
}

std::optional<AutomatonIsomorphism> isomorphic(const MealyAutomaton& a,
                                               const MealyAutomaton& b) {
  const int q = a.state_count();
  const int n = a.alphabet_size();
  if (q != b.state_count() || n != b.alphabet_size()) return std::nullopt;

  std::vector<int> psi(static_cast<size_t>(n));
  std::iota(psi.begin(), psi.end(), 0);
  do {
    // For this letter bijection, try every image of state 0 and propagate.
    for (int seed = 0; seed < q; ++seed) {
      std::vector<int> phi(static_cast<size_t>(q), -1);
      std::vector<char> used(static_cast<size_t>(q), 0);
      bool bad = false;
      std::vector<int> stack;
      auto assign = [&](int s, int image) {
        if (phi[static_cast<size_t>(s)] != -1) {
          if (phi[static_cast<size_t>(s)] != image) bad = true;
          return;
        }
        if (used[static_cast<size_t>(image)]) {
          bad = true;
          return;
        }
        phi[static_cast<size_t>(s)] = image;
        used[static_cast<size_t>(image)] = 1;
        stack.push_back(s);
      };
      assign(0, seed);
      while (!bad) {
        while (!stack.empty() && !bad) {
          int s = stack.back();
          stack.pop_back();
          for (int x = 0; x < n; ++x) {
            int img = phi[static_cast<size_t>(s)];
            int px = psi[static_cast<size_t>(x)];
            assign(a.transition[static_cast<size_t>(s)][static_cast<size_t>(x)],
                   b.transition[static_cast<size_t>(img)][static_cast<size_t>(px)]);
            if (bad) break;
            if (b.output[static_cast<size_t>(img)][static_cast<size_t>(px)] !=
                psi[static_cast<size_t>(
                    a.output[static_cast<size_t>(s)][static_cast<size_t>(x)])]) {
              bad = true;
              break;
            }
          }
        }
        if (bad) break;
        // Components not reached from state 0: seed the next unassigned
        // state with the smallest unused image.
        int next = -1;
        for (int s = 0; s < q; ++s) {
          if (phi[static_cast<size_t>(s)] == -1) {
            next = s;
            break;
          }
        }
        if (next == -1) break;
        int image = -1;
        for (int t = 0; t < q; ++t) {
          if (!used[static_cast<size_t>(t)]) {
            image = t;
            break;
          }
        }
        assign(next, image);
      }
      if (bad) continue;
      // Full verification of both equations.
      bool ok = true;
      for (int s = 0; s < q && ok; ++s) {
        for (int x = 0; x < n && ok; ++x) {
          int img = phi[static_cast<size_t>(s)];
          int px = psi[static_cast<size_t>(x)];
          ok = b.transition[static_cast<size_t>(img)][static_cast<size_t>(px)] ==
                   phi[static_cast<size_t>(a.transition[static_cast<size_t>(s)]
                                                      [static_cast<size_t>(x)])] &&
               b.output[static_cast<size_t>(img)][static_cast<size_t>(px)] ==
                   psi[static_cast<size_t>(
                       a.output[static_cast<size_t>(s)][static_cast<size_t>(x)])];
        }
      }
      if (ok) return AutomatonIsomorphism{phi, psi};
    }
  } while (std::next_permutation(psi.begin(), psi.end()));
  return std::nullopt;
}

MinimizationResult minimize(const MealyAutomaton& a) {
  const int q = a.state_count();
  const int n = a.alphabet_size();

  // Initial partition: states with equal output rows.
  std::vector<int> cls(static_cast<size_t>(q));
  {
    std::map<std::vector<int>, int> by_row;
    for (int s = 0; s < q; ++s) {
      auto [it, inserted] = by_row.emplace(a.output[static_cast<size_t>(s)],
                                           static_cast<int>(by_row.size()));
      cls[static_cast<size_t>(s)] = it->second;
    }
  }
  // Refine by transition class signatures until stable.
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> sig_to_class;
    std::vector<int> next(static_cast<size_t>(q));
    for (int s = 0; s < q; ++s) {
      std::vector<int> sig(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        sig[static_cast<size_t>(x)] =
            cls[static_cast<size_t>(a.transition[static_cast<size_t>(s)]
                                                [static_cast<size_t>(x)])];
      }
      auto key = std::make_pair(cls[static_cast<size_t>(s)], std::move(sig));
      auto [it, inserted] =
          sig_to_class.emplace(std::move(key), static_cast<int>(sig_to_class.size()));
      next[static_cast<size_t>(s)] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  // Renumber classes in order of first occurrence, pick representatives.
  std::vector<int> renum(static_cast<size_t>(q), -1);
  std::vector<int> reps;
  for (int s = 0; s < q; ++s) {
    int c = cls[static_cast<size_t>(s)];
    if (renum[static_cast<size_t>(c)] == -1) {
      renum[static_cast<size_t>(c)] = static_cast<int>(reps.size());
      reps.push_back(s);
    }
    cls[static_cast<size_t>(s)] = renum[static_cast<size_t>(c)];
  }

  MealyAutomaton m;
  m.letter_labels = a.letter_labels;
  m.letter_group = a.letter_group;
  const int k = static_cast<int>(reps.size());
  m.state_labels.reserve(static_cast<size_t>(k));
  m.transition.assign(static_cast<size_t>(k), std::vector<int>(n));
  m.output.assign(static_cast<size_t>(k), std::vector<int>(n));
  for (int c = 0; c < k; ++c) {
    int rep = reps[static_cast<size_t>(c)];
    m.state_labels.push_back(a.state_labels[static_cast<size_t>(rep)]);
    for (int x = 0; x < n; ++x) {
      m.transition[static_cast<size_t>(c)][static_cast<size_t>(x)] =
          cls[static_cast<size_t>(a.transition[static_cast<size_t>(rep)]
                                              [static_cast<size_t>(x)])];
      m.output[static_cast<size_t>(c)][static_cast<size_t>(x)] =
          a.output[static_cast<size_t>(rep)][static_cast<size_t>(x)];
    }
  }
  return MinimizationResult{std::move(m), std::move(cls)};
}

nlohmann::ordered_json automaton_to_json(const MealyAutomaton& a) {
  nlohmann::ordered_json j;
  j["states"] = a.state_labels;
  j["alphabet"] = a.letter_labels;
  j["transition"] = a.transition;
  j["output"] = a.output;
  return j;
}

MealyAutomaton automaton_from_json(const nlohmann::json& j) {
  MealyAutomaton a;
  a.state_labels = j.at("states").get<std::vector<std::string>>();
  a.letter_labels = j.at("alphabet").get<std::vector<std::string>>();
  a.transition = j.at("transition").get<std::vector<std::vector<int>>>();
  a.output = j.at("output").get<std::vector<std::vector<int>>>();
  a.validate();
  return a;
}

std::string automaton_to_dot(const MealyAutomaton& a) {
  std::ostringstream out;
  out << "digraph mealy {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out << "  \"" << a.state_labels[static_cast<size_t>(s)] << "\";\n";
  }
  for (int s = 0; s < a.state_count(); ++s) {
    for (int x = 0; x < a.alphabet_size(); ++x) {
      out << "  \"" << a.state_labels[static_cast<size_t>(s)] << "\" -> \""
          << a.state_labels[static_cast<size_t>(
                 a.transition[static_cast<size_t>(s)][static_cast<size_t>(x)])]
          << "\" [label=\"" << a.letter_labels[static_cast<size_t>(x)] << "|"
          << a.letter_labels[static_cast<size_t>(
                 a.output[static_cast<size_t>(s)][static_cast<size_t>(x)])]
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace autgrp
