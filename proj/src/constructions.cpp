#include "autgrp/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace autgrp {

AutomatonPtr build_automaton_abelian(
    std::shared_ptr<const FiniteAbelianGroup> group) {
  if (!group) throw std::invalid_argument("null group");
  const int n = static_cast<int>(group->order());
  auto a = std::make_shared<MealyAutomaton>();
  a->letter_group = group;
  a->state_labels.reserve(static_cast<size_t>(n));
  a->letter_labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    a->state_labels.push_back("a" + group->label(i));
    a->letter_labels.push_back(group->label(i));
  }
  a->transition.assign(static_cast<size_t>(n), std::vector<int>(n));
  a->output.assign(static_cast<size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a->transition[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          group->sub(i, j);
      a->output[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          group->add(i, j);
    }
  }
  a->validate();
  return a;
}

SquareComplex build_complex_abelian(const FiniteAbelianGroup& group) {
  const int n = static_cast<int>(group.order());
  SquareComplex c;
  for (int i = 0; i < n; ++i) {
    c.vertical_labels.push_back("a" + group.label(i));
    c.horizontal_labels.push_back(group.label(i));
  }
  c.squares.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c.squares.push_back(Square{i, j, group.sub(i, j), group.add(i, j)});
    }
  }
  return c;
}

namespace {

const FiniteAbelianGroup& letter_group_of(const AutomatonPtr& ax) {
  if (!ax || !ax->letter_group) {
    throw std::domain_error("automaton alphabet carries no group structure");
  }
  return *ax->letter_group;
}

}  // namespace

GroupWord rigid_translation(const AutomatonPtr& ax, int i) {
  const FiniteAbelianGroup& g = letter_group_of(ax);
  return GroupWord(ax, {SignedGen{0, false}, SignedGen{g.negate(i), true}});
}

GroupWord lamp_generator_c(const AutomatonPtr& ax, int i) {
  letter_group_of(ax);
  return GroupWord(ax, {SignedGen{0, true}, SignedGen{i, false}});
}

GroupWord first_level_stabilizer_b(const AutomatonPtr& ax, int i) {
  const FiniteAbelianGroup& g = letter_group_of(ax);
  return GroupWord(ax, {SignedGen{i, false}, SignedGen{g.negate(i), false},
                        SignedGen{0, true}});
}

CayleyGroup::CayleyGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  if (n < 2) throw std::invalid_argument("group order < 2");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("Cayley table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("Cayley table entry out of range");
      }
    }
  }
  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(static_cast<size_t>(n), 0);
    std::vector<char> col_seen(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[static_cast<size_t>(mul(i, j))]++) {
        throw std::invalid_argument("Cayley table row is not a permutation");
      }
      if (col_seen[static_cast<size_t>(mul(j, i))]++) {
        throw std::invalid_argument("Cayley table column is not a permutation");
      }
    }
  }
  // Two-sided identity.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = mul(e, i) == i && mul(i, e) == i;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ == -1) {
    throw std::invalid_argument("Cayley table has no identity element");
  }
  // Associativity.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
          throw std::invalid_argument("Cayley table is not associative");
        }
      }
    }
  }
  // Inverses (two-sided, forced by the above but checked anyway).
  inverse_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == identity_ && mul(j, i) == identity_) {
        inverse_[static_cast<size_t>(i)] = j;
        break;
      }
    }
    if (inverse_[static_cast<size_t>(i)] == -1) {
      throw std::invalid_argument("Cayley table element has no inverse");
    }
  }
  if (names_.empty()) {
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != n) {
    throw std::invalid_argument("Cayley name count does not match order");
  }
}

CayleyGroup CayleyGroup::from_json(const nlohmann::json& j) {
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
  }
  if (j.contains("order") &&
      j.at("order").get<int>() != static_cast<int>(table.size())) {
    throw std::invalid_argument("Cayley order does not match table size");
  }
  return CayleyGroup(std::move(table), std::move(names));
}

AutomatonPtr build_automaton_group(const CayleyGroup& y) {
  const int n = y.order();
  auto a = std::make_shared<MealyAutomaton>();
  for (int i = 0; i < n; ++i) {
    a->state_labels.push_back("q_" + y.name(i));
    a->letter_labels.push_back(y.name(i));
  }
  a->transition.assign(static_cast<size_t>(n), std::vector<int>(n));
  a->output.assign(static_cast<size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a->transition[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          y.mul(y.inverse(j), i);
      a->output[static_cast<size_t>(i)][static_cast<size_t>(j)] = y.mul(i, j);
    }
  }
  a->validate();
  if (!is_reversible(*a)) {
    throw std::logic_error("Cayley automaton unexpectedly not reversible");
  }
  return a;
}

SelfDualityWitness check_self_duality(const FiniteAbelianGroup& group) {
  AutomatonPtr ax = build_automaton_abelian(
      std::make_shared<FiniteAbelianGroup>(group));
  MealyAutomaton d = dual(*ax);
  const int n = static_cast<int>(group.order());
  SelfDualityWitness w;
  w.state_map.resize(static_cast<size_t>(n));
  w.letter_map.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    w.state_map[static_cast<size_t>(i)] = group.negate(i);
    w.letter_map[static_cast<size_t>(i)] = i;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int phi_i = w.state_map[static_cast<size_t>(i)];
      int psi_j = w.letter_map[static_cast<size_t>(j)];
      int lhs_t = d.transition[static_cast<size_t>(phi_i)][static_cast<size_t>(psi_j)];
      int rhs_t = w.state_map[static_cast<size_t>(
          ax->transition[static_cast<size_t>(i)][static_cast<size_t>(j)])];
      int lhs_o = d.output[static_cast<size_t>(phi_i)][static_cast<size_t>(psi_j)];
      int rhs_o = w.letter_map[static_cast<size_t>(
          ax->output[static_cast<size_t>(i)][static_cast<size_t>(j)])];
      if (lhs_t != rhs_t || lhs_o != rhs_o) {
        std::ostringstream msg;
        msg << "self-duality witness violated at (i, j) = ("
            << group.label(i) << ", " << group.label(j) << ")";
        throw std::logic_error(msg.str());
      }
    }
  }
  return w;
}

}  // namespace autgrp
