#include "autgrp/lamplighter.hpp"

#include <charconv>
#include <stdexcept>

namespace autgrp {

LamplighterElement ll_multiply(const FiniteAbelianGroup& g,
                               const LamplighterElement& p,
                               const LamplighterElement& q) {
  LamplighterElement r;
  r.lamps = p.lamps;
  r.shift = p.shift + q.shift;
  for (const auto& [pos, v] : q.lamps) {
    long long at = pos + p.shift;
    auto it = r.lamps.find(at);
    int sum = g.add(it == r.lamps.end() ? 0 : it->second, v);
    if (sum == 0) {
      if (it != r.lamps.end()) r.lamps.erase(it);
    } else {
      r.lamps[at] = sum;
    }
  }
  return r;
}

LamplighterElement ll_inverse(const FiniteAbelianGroup& g,
                              const LamplighterElement& p) {
  LamplighterElement r;
  r.shift = -p.shift;
  for (const auto& [pos, v] : p.lamps) {
    r.lamps[pos - p.shift] = g.negate(v);
  }
  return r;
}

LamplighterElement word_to_lamplighter(const GroupWord& w) {
  const MealyAutomaton& a = *w.automaton();
  if (!a.letter_group) {
    throw std::domain_error("alphabet carries no group structure");
  }
  const FiniteAbelianGroup& g = *a.letter_group;
  LamplighterElement cur;
  for (const auto& l : w.letters()) {
    LamplighterElement img;
    img.shift = 1;
    if (l.state != 0) img.lamps[0] = l.state;
    if (l.inv) img = ll_inverse(g, img);
    cur = ll_multiply(g, cur, img);
  }
  return cur;
}

GroupWord lamplighter_to_word(const AutomatonPtr& ax,
                              const LamplighterElement& p) {
  if (!ax || !ax->letter_group) {
    throw std::domain_error("alphabet carries no group structure");
  }
  const int n = static_cast<int>(ax->letter_group->order());
  std::vector<SignedGen> letters;
  auto emit_a0 = [&letters](long long power) {
    for (long long k = 0; k < std::llabs(power); ++k) {
      letters.push_back(SignedGen{0, power < 0});
    }
  };
  for (const auto& [pos, v] : p.lamps) {
    if (v <= 0 || v >= n) {
      throw std::invalid_argument("lamp value outside the group");
    }
    emit_a0(pos);
    letters.push_back(SignedGen{v, false});
    emit_a0(-(pos + 1));
  }
  emit_a0(p.shift);
  return GroupWord(ax, std::move(letters)).freely_reduced();
}

nlohmann::ordered_json lamplighter_to_json(const FiniteAbelianGroup& g,
                                           const LamplighterElement& p) {
  nlohmann::ordered_json j;
  auto lamps = nlohmann::ordered_json::object();
  for (const auto& [pos, v] : p.lamps) {
    lamps[std::to_string(pos)] = g.label(v);
  }
  j["lamps"] = std::move(lamps);
  j["shift"] = p.shift;
  return j;
}

LamplighterElement lamplighter_from_json(const FiniteAbelianGroup& g,
                                         const nlohmann::json& j) {
  LamplighterElement p;
  p.shift = j.at("shift").get<long long>();
  for (const auto& [key, value] : j.at("lamps").items()) {
    long long pos = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), pos);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw std::invalid_argument("bad lamp position '" + key + "'");
    }
    auto idx = g.index_of_label(value.get<std::string>());
    if (!idx) {
      throw std::invalid_argument("bad lamp value '" +
                                  value.get<std::string>() + "'");
    }
    if (*idx != 0) p.lamps[pos] = *idx;
  }
  return p;
}

}  // namespace autgrp
