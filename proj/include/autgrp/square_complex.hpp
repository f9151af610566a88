#ifndef AUTGRP_SQUARE_COMPLEX_HPP
#define AUTGRP_SQUARE_COMPLEX_HPP

#include <string>
#include <vector>

#include "autgrp/mealy.hpp"
#include "json.hpp"

namespace autgrp {

/// One square read as the oriented path (v, h, v1-reversed, h1-reversed),
/// starting at the SW corner: up the left edge v, along the top edge h, then
/// down the right edge v1 and back along the bottom edge h1.
struct Square {
  int v = 0;
  int h = 0;
  int v1 = 0;
  int h1 = 0;
  bool operator==(const Square&) const = default;
};

/// One-vertex oriented VH square complex: oriented vertical and horizontal
/// loops plus a list of squares.
struct SquareComplex {
  std::vector<std::string> vertical_labels;
  std::vector<std::string> horizontal_labels;
  std::vector<Square> squares;

  int vertical_count() const { return static_cast<int>(vertical_labels.size()); }
  int horizontal_count() const {
    return static_cast<int>(horizontal_labels.size());
  }
  void validate() const;
  bool operator==(const SquareComplex&) const = default;
};

/// A corner germ pair covered by some count of squares other than one.
struct CornerDefect {
  bool v_outgoing = false;
  int v = 0;
  bool h_outgoing = false;
  int h = 0;
  long long count = 0;
};

/// Corner counts of the link of the unique vertex. Germ 2*e is the outgoing
/// end of edge e, germ 2*e + 1 the incoming one; counts[gv][gh] is the number
/// of squares with that corner.
struct LinkStatus {
  std::vector<std::vector<long long>> counts;
  long long total_corners = 0;
  std::vector<CornerDefect> defects;
  bool complete() const { return defects.empty(); }
};

SquareComplex complex_from_automaton(const MealyAutomaton& a);

// Requires every (v, h) pair to start exactly one square; throws
// std::invalid_argument "not uniquely squared ..." otherwise.
MealyAutomaton automaton_from_complex(const SquareComplex& c);

LinkStatus link_status(const SquareComplex& c);
bool is_complete(const SquareComplex& c);

struct Presentation {
  struct Relation {
    int q = 0;   // vertical generator
    int x = 0;   // horizontal generator
    int lq = 0;  // vertical generator appearing inverted
    int mx = 0;  // horizontal generator appearing inverted
  };
  std::vector<std::string> vertical_generators;
  std::vector<std::string> horizontal_generators;
  std::vector<Relation> relations;  // relator q * x * lq^-1 * mx^-1
};

Presentation fundamental_presentation(const SquareComplex& c);
Presentation fundamental_presentation(const MealyAutomaton& a);
std::string presentation_to_text(const Presentation& p);
nlohmann::ordered_json presentation_to_json(const Presentation& p);

struct CellCensus {
  long long zero_cells = 0;
  long long oriented_one_cells = 0;
  long long two_cells = 0;
  bool operator==(const CellCensus&) const = default;
};

CellCensus cell_census(const SquareComplex& c);

nlohmann::ordered_json complex_to_json(const SquareComplex& c);
SquareComplex complex_from_json(const nlohmann::json& j);
nlohmann::ordered_json link_status_to_json(const SquareComplex& c);

// DOT rendering of the link of the unique vertex (germ vertices, one edge
// per square corner).
std::string complex_to_dot(const SquareComplex& c);

// DOT rendering of the square list itself, one record node per 2-cell.
std::string squares_to_dot(const SquareComplex& c);

}  // namespace autgrp

#endif
