#ifndef AUTGRP_WORDS_HPP
#define AUTGRP_WORDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "autgrp/mealy.hpp"

namespace autgrp {

/// Raised when a semi-decision procedure hits its visited-set cap.
struct undecided_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSectionCap = 1'000'000;

struct SignedGen {
  int state = 0;
  bool inv = false;
  bool operator==(const SignedGen&) const = default;
};

/// Formal product of automaton states and their inverses; the computational
/// handle on elements of the automaton group. The empty word is the identity.
class GroupWord {
 public:
  GroupWord(AutomatonPtr automaton, std::vector<SignedGen> letters);
  static GroupWord identity(AutomatonPtr automaton);

  // Parses words such as "a1 a2 a0^-1" or "a0^3"; exponents expand.
  static GroupWord parse(AutomatonPtr automaton, std::string_view text);

  const AutomatonPtr& automaton() const { return automaton_; }
  const std::vector<SignedGen>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }

  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord inverse() const;
  GroupWord freely_reduced() const;

  std::string str() const;

 private:
  AutomatonPtr automaton_;
  std::vector<SignedGen> letters_;
};

/// Decomposition of a word into its rooted permutation and first-level
/// sections: the word acts on xw as root[x] followed by sections[x] on w.
struct WreathRecursion {
  std::vector<int> root;
  std::vector<GroupWord> sections;  // indexed by the first letter
};

WreathRecursion wreath_recursion(const GroupWord& w);

// Image of a finite word under the transformation the group word defines
// (letters applied left to right; the first letter acts first).
std::vector<int> act(const GroupWord& w, std::span<const int> word);

// The permutation the word induces on single letters.
std::vector<int> root_permutation(const GroupWord& w);

// First-level section at a letter; |result| == |w| (no reduction applied).
GroupWord section(const GroupWord& w, int letter);

// Section at a finite word (iterated first-level sections).
GroupWord section_at(const GroupWord& w, std::span<const int> word);

// Exact identity test by exploration of the section closure in freely reduced
// form: the word is the identity iff every reachable section has an identity
// root permutation. Throws undecided_error if the visited set exceeds `cap`.
bool is_identity(const GroupWord& w, std::uint64_t cap = kDefaultSectionCap);

// Exact equality of the transformations two words define.
bool words_equal(const GroupWord& a, const GroupWord& b,
                 std::uint64_t cap = kDefaultSectionCap);

// Membership in the coordinatewise-translation group: returns the first-level
// translation k iff every reachable section has a translation root and all of
// its first-level sections are behaviourally equal. Requires an automaton
// whose alphabet carries group structure.
std::optional<int> constant_translation(const GroupWord& w,
                                        std::uint64_t cap = kDefaultSectionCap);

// True iff w acts as the rigid translation by `letter`: the root permutation
// is x -> x + letter and every first-level section is the identity.
bool acts_rigidly_as(const GroupWord& w, int letter,
                     std::uint64_t cap = kDefaultSectionCap);

}  // namespace autgrp

#endif
