#include "autgrp/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace autgrp {

namespace {

int row_inverse_lookup(const MealyAutomaton& a, int state, int letter) {
  const auto& row = a.output[static_cast<size_t>(state)];
  for (int x = 0; x < static_cast<int>(row.size()); ++x) {
    if (row[static_cast<size_t>(x)] == letter) return x;
  }
  throw std::invalid_argument("letter outside the alphabet");
}

using Encoded = std::vector<int32_t>;

Encoded encode(const std::vector<SignedGen>& letters) {
  Encoded e;
  e.reserve(letters.size());
  for (const auto& l : letters) {
    e.push_back(static_cast<int32_t>(l.state * 2 + (l.inv ? 1 : 0)));
  }
  return e;
}

std::vector<SignedGen> decode(const Encoded& e) {
  std::vector<SignedGen> letters;
  letters.reserve(e.size());
  for (int32_t v : e) letters.push_back(SignedGen{v / 2, (v & 1) != 0});
  return letters;
}

struct EncodedHash {
  size_t operator()(const Encoded& e) const {
    size_t h = 1469598103934665603ull;
    for (int32_t v : e) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void reduce_in_place(std::vector<SignedGen>& letters) {
  std::vector<SignedGen> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back().state == l.state && out.back().inv != l.inv) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters = std::move(out);
}

std::vector<SignedGen> section_letters(const MealyAutomaton& a,
                                       const std::vector<SignedGen>& w,
                                       int letter) {
  std::vector<SignedGen> res;
  res.reserve(w.size());
  int cur = letter;
  for (const auto& l : w) {
    if (!l.inv) {
      res.push_back(SignedGen{
          a.transition[static_cast<size_t>(l.state)][static_cast<size_t>(cur)],
          false});
      cur = a.output[static_cast<size_t>(l.state)][static_cast<size_t>(cur)];
    } else {
      int y = row_inverse_lookup(a, l.state, cur);
      res.push_back(SignedGen{
          a.transition[static_cast<size_t>(l.state)][static_cast<size_t>(y)],
          true});
      cur = y;
    }
  }
  return res;
}

}  // namespace

GroupWord::GroupWord(AutomatonPtr automaton, std::vector<SignedGen> letters)
    : automaton_(std::move(automaton)), letters_(std::move(letters)) {
  if (!automaton_) throw std::invalid_argument("word has no automaton");
  require_permutational(*automaton_);
  for (const auto& l : letters_) {
    if (l.state < 0 || l.state >= automaton_->state_count()) {
      throw std::invalid_argument("word letter outside the state set");
    }
  }
}

GroupWord GroupWord::identity(AutomatonPtr automaton) {
  return GroupWord(std::move(automaton), {});
}

GroupWord GroupWord::parse(AutomatonPtr automaton, std::string_view text) {
  if (!automaton) throw std::invalid_argument("word has no automaton");
  std::vector<SignedGen> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string base = token;
    long exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      base = token.substr(0, caret);
      std::string etext = token.substr(caret + 1);
      auto [ptr, ec] =
          std::from_chars(etext.data(), etext.data() + etext.size(), exp);
      if (ec != std::errc() || ptr != etext.data() + etext.size()) {
        throw std::invalid_argument("bad exponent in word token '" + token + "'");
      }
    }
    auto idx = automaton->state_index(base);
    if (!idx) {
      throw std::invalid_argument("unknown state '" + base + "' in word");
    }
    if (std::llabs(exp) > 100000) {
      throw std::invalid_argument("exponent too large in word token");
    }
    for (long k = 0; k < std::llabs(exp); ++k) {
      letters.push_back(SignedGen{*idx, exp < 0});
    }
  }
  return GroupWord(std::move(automaton), std::move(letters));
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  if (!(*automaton_ == *rhs.automaton_)) {
    throw std::invalid_argument("words over different automata");
  }
  std::vector<SignedGen> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GroupWord(automaton_, std::move(letters));
}

GroupWord GroupWord::inverse() const {
  std::vector<SignedGen> letters(letters_.rbegin(), letters_.rend());
  for (auto& l : letters) l.inv = !l.inv;
  return GroupWord(automaton_, std::move(letters));
}

GroupWord GroupWord::freely_reduced() const {
  std::vector<SignedGen> letters = letters_;
  reduce_in_place(letters);
  return GroupWord(automaton_, std::move(letters));
}

std::string GroupWord::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) out << ' ';
    first = false;
    out << automaton_->state_labels[static_cast<size_t>(l.state)];
    if (l.inv) out << "^-1";
  }
  return out.str();
}

WreathRecursion wreath_recursion(const GroupWord& w) {
  WreathRecursion rec;
  rec.root = root_permutation(w);
  const int n = w.automaton()->alphabet_size();
  rec.sections.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) rec.sections.push_back(section(w, x));
  return rec;
}

std::vector<int> act(const GroupWord& w, std::span<const int> word) {
  const MealyAutomaton& a = *w.automaton();
  std::vector<int> cur(word.begin(), word.end());
  for (int x : cur) {
    if (x < 0 || x >= a.alphabet_size()) {
      throw std::invalid_argument("letter outside the alphabet");
    }
  }
  for (const auto& l : w.letters()) {
    if (!l.inv) {
      cur = act(a, l.state, cur);
    } else {
      int q = l.state;
      for (int& x : cur) {
        int y = row_inverse_lookup(a, q, x);
        x = y;
        q = a.transition[static_cast<size_t>(q)][static_cast<size_t>(y)];
      }
    }
  }
  return cur;
}

std::vector<int> root_permutation(const GroupWord& w) {
  const MealyAutomaton& a = *w.automaton();
  const int n = a.alphabet_size();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    int cur = x;
    for (const auto& l : w.letters()) {
      cur = l.inv
                ? row_inverse_lookup(a, l.state, cur)
                : a.output[static_cast<size_t>(l.state)][static_cast<size_t>(cur)];
    }
    perm[static_cast<size_t>(x)] = cur;
  }
  return perm;
}

GroupWord section(const GroupWord& w, int letter) {
  const MealyAutomaton& a = *w.automaton();
  if (letter < 0 || letter >= a.alphabet_size()) {
    throw std::invalid_argument("letter outside the alphabet");
  }
  return GroupWord(w.automaton(), section_letters(a, w.letters(), letter));
}

GroupWord section_at(const GroupWord& w, std::span<const int> word) {
  GroupWord cur = w;
  for (int x : word) cur = section(cur, x);
  return cur;
}

// Exploration is depth first: a section with a non-identity root, when one
// exists, tends to sit deep below a narrow spine, and breadth-first order
// would enumerate entire identity-root levels before reaching it.
bool is_identity(const GroupWord& w, std::uint64_t cap) {
  const MealyAutomaton& a = *w.automaton();
  const int n = a.alphabet_size();
  const int q = a.state_count();

  // Inverted output rows, computed once for the whole exploration.
  std::vector<std::vector<int>> inv_row(static_cast<size_t>(q),
                                        std::vector<int>(static_cast<size_t>(n)));
  for (int s = 0; s < q; ++s) {
    for (int x = 0; x < n; ++x) {
      inv_row[static_cast<size_t>(s)][static_cast<size_t>(
          a.output[static_cast<size_t>(s)][static_cast<size_t>(x)])] = x;
    }
  }

  auto root_trivial = [&](const std::vector<SignedGen>& word) {
    for (int x = 0; x < n; ++x) {
      int cur = x;
      for (const auto& l : word) {
        cur = l.inv ? inv_row[static_cast<size_t>(l.state)][static_cast<size_t>(cur)]
                    : a.output[static_cast<size_t>(l.state)][static_cast<size_t>(cur)];
      }
      if (cur != x) return false;
    }
    return true;
  };
  auto section_of = [&](const std::vector<SignedGen>& word, int letter) {
    std::vector<SignedGen> res;
    res.reserve(word.size());
    int cur = letter;
    for (const auto& l : word) {
      if (!l.inv) {
        res.push_back(SignedGen{
            a.transition[static_cast<size_t>(l.state)][static_cast<size_t>(cur)],
            false});
        cur = a.output[static_cast<size_t>(l.state)][static_cast<size_t>(cur)];
      } else {
        int y = inv_row[static_cast<size_t>(l.state)][static_cast<size_t>(cur)];
        res.push_back(SignedGen{
            a.transition[static_cast<size_t>(l.state)][static_cast<size_t>(y)],
            true});
        cur = y;
      }
    }
    reduce_in_place(res);
    return res;
  };

  std::vector<SignedGen> start = w.letters();
  reduce_in_place(start);

  std::unordered_set<Encoded, EncodedHash> visited;
  std::vector<Encoded> queue;
  visited.insert(encode(start));
  queue.push_back(encode(start));
  while (!queue.empty()) {
    Encoded cur = std::move(queue.back());
    queue.pop_back();
    std::vector<SignedGen> letters = decode(cur);
    if (!root_trivial(letters)) return false;
    for (int x = 0; x < n; ++x) {
      Encoded key = encode(section_of(letters, x));
      if (visited.contains(key)) continue;
      if (visited.size() >= cap) {
        throw undecided_error("undecided: state cap exceeded");
      }
      visited.insert(key);
      queue.push_back(std::move(key));
    }
  }
  return true;
}

bool words_equal(const GroupWord& a, const GroupWord& b, std::uint64_t cap) {
  return is_identity(a * b.inverse(), cap);
}

std::optional<int> constant_translation(const GroupWord& w, std::uint64_t cap) {
  const MealyAutomaton& a = *w.automaton();
  if (!a.letter_group) {
    throw std::domain_error("alphabet carries no group structure");
  }
  const FiniteAbelianGroup& g = *a.letter_group;
  const int n = a.alphabet_size();

  auto translation_of = [&](const GroupWord& u) -> std::optional<int> {
    std::vector<int> root = root_permutation(u);
    int k = root[0];
    for (int x = 0; x < n; ++x) {
      if (root[static_cast<size_t>(x)] != g.add(x, k)) return std::nullopt;
    }
    return k;
  };

  GroupWord start = w.freely_reduced();
  auto top = translation_of(start);
  if (!top) return std::nullopt;

  // Greatest-fixpoint style exploration: words already on the path (or
  // previously accepted) are assumed to be members.
  std::unordered_set<Encoded, EncodedHash> assumed;
  GroupWord cur = start;
  while (true) {
    Encoded key = encode(cur.letters());
    if (assumed.contains(key)) break;
    if (assumed.size() >= cap) {
      throw undecided_error("undecided: state cap exceeded");
    }
    assumed.insert(key);
    if (!translation_of(cur)) return std::nullopt;
    GroupWord s0 = section(cur, 0).freely_reduced();
    for (int x = 1; x < n; ++x) {
      if (!words_equal(section(cur, x), s0, cap)) return std::nullopt;
    }
    cur = s0;
  }
  return top;
}

bool acts_rigidly_as(const GroupWord& w, int letter, std::uint64_t cap) {
  const MealyAutomaton& a = *w.automaton();
  if (!a.letter_group) {
    throw std::domain_error("alphabet carries no group structure");
  }
  const FiniteAbelianGroup& g = *a.letter_group;
  const int n = a.alphabet_size();
  std::vector<int> root = root_permutation(w);
  for (int x = 0; x < n; ++x) {
    if (root[static_cast<size_t>(x)] != g.add(x, letter)) return false;
  }
  for (int x = 0; x < n; ++x) {
    if (!is_identity(section(w, x), cap)) return false;
  }
  return true;
}

}  // namespace autgrp
