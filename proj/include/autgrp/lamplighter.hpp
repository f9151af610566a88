#ifndef AUTGRP_LAMPLIGHTER_HPP
#define AUTGRP_LAMPLIGHTER_HPP

#include <map>

#include "autgrp/abelian.hpp"
#include "autgrp/words.hpp"
#include "json.hpp"

namespace autgrp {

/// Normal form for the restricted wreath product X wr Z: a finitely supported
/// lamp configuration (positions -> nonzero group element indices) plus an
/// integer shift. Equality is structural; the only normalisation is dropping
/// zero lamps.
struct LamplighterElement {
  std::map<long long, int> lamps;
  long long shift = 0;
  bool operator==(const LamplighterElement&) const = default;
};

// Product law, frozen by the differential test against the automaton action:
//   (f1, t1) * (f2, t2) = (f1 + shift of f2 by t1, t1 + t2)
// where the lamp of f2 at position p lands at p + t1.
LamplighterElement ll_multiply(const FiniteAbelianGroup& g,
                               const LamplighterElement& p,
                               const LamplighterElement& q);

LamplighterElement ll_inverse(const FiniteAbelianGroup& g,
                              const LamplighterElement& p);

// Homomorphic image of a word over A_X under a_j -> ({0 -> j}, 1), computed
// by folding ll_multiply over the letters.
LamplighterElement word_to_lamplighter(const GroupWord& w);

// A word over the a_i whose image is the given element: for each lamp
// (p -> v) in ascending position order emit a_0^p a_v a_0^-(p+1), then a_0
// to the shift, freely reduced.
GroupWord lamplighter_to_word(const AutomatonPtr& ax,
                              const LamplighterElement& p);

nlohmann::ordered_json lamplighter_to_json(const FiniteAbelianGroup& g,
                                           const LamplighterElement& p);
LamplighterElement lamplighter_from_json(const FiniteAbelianGroup& g,
                                         const nlohmann::json& j);

}  // namespace autgrp

#endif
