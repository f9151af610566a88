#include "autgrp/square_complex.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace autgrp {

namespace {

void check_unique(const std::vector<std::string>& labels, const char* kind) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument(std::string(kind) + " labels are not unique");
  }
}

}  // namespace

void SquareComplex::validate() const {
  if (vertical_labels.empty() || horizontal_labels.empty()) {
    throw std::invalid_argument("complex needs vertical and horizontal edges");
  }
  check_unique(vertical_labels, "vertical edge");
  check_unique(horizontal_labels, "horizontal edge");
  for (const Square& s : squares) {
    if (s.v < 0 || s.v >= vertical_count() || s.v1 < 0 ||
        s.v1 >= vertical_count() || s.h < 0 || s.h >= horizontal_count() ||
        s.h1 < 0 || s.h1 >= horizontal_count()) {
      throw std::invalid_argument("square references a missing edge");
    }
  }
}

SquareComplex complex_from_automaton(const MealyAutomaton& a) {
  SquareComplex c;
  c.vertical_labels = a.state_labels;
  c.horizontal_labels = a.letter_labels;
  c.squares.reserve(static_cast<size_t>(a.state_count()) *
                    static_cast<size_t>(a.alphabet_size()));
  for (int q = 0; q < a.state_count(); ++q) {
    for (int x = 0; x < a.alphabet_size(); ++x) {
      c.squares.push_back(Square{
          q, x, a.transition[static_cast<size_t>(q)][static_cast<size_t>(x)],
          a.output[static_cast<size_t>(q)][static_cast<size_t>(x)]});
    }
  }
  return c;
}

MealyAutomaton automaton_from_complex(const SquareComplex& c) {
  c.validate();
  const int nv = c.vertical_count();
  const int nh = c.horizontal_count();
  std::vector<std::vector<int>> count(
      static_cast<size_t>(nv), std::vector<int>(static_cast<size_t>(nh), 0));
  MealyAutomaton a;
  a.state_labels = c.vertical_labels;
  a.letter_labels = c.horizontal_labels;
  a.transition.assign(static_cast<size_t>(nv),
                      std::vector<int>(static_cast<size_t>(nh), 0));
  a.output.assign(static_cast<size_t>(nv),
                  std::vector<int>(static_cast<size_t>(nh), 0));
  for (const Square& s : c.squares) {
    ++count[static_cast<size_t>(s.v)][static_cast<size_t>(s.h)];
    a.transition[static_cast<size_t>(s.v)][static_cast<size_t>(s.h)] = s.v1;
    a.output[static_cast<size_t>(s.v)][static_cast<size_t>(s.h)] = s.h1;
  }
  for (int v = 0; v < nv; ++v) {
    for (int h = 0; h < nh; ++h) {
      if (count[static_cast<size_t>(v)][static_cast<size_t>(h)] != 1) {
        std::ostringstream msg;
        msg << "not uniquely squared: pair ("
            << c.vertical_labels[static_cast<size_t>(v)] << ", "
            << c.horizontal_labels[static_cast<size_t>(h)] << ") starts "
            << count[static_cast<size_t>(v)][static_cast<size_t>(h)]
            << " squares";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  return a;
}

LinkStatus link_status(const SquareComplex& c) {
  c.validate();
  const int nv = c.vertical_count();
  const int nh = c.horizontal_count();
  // Germ index: 2*edge for the outgoing germ, 2*edge + 1 for the incoming.
  std::vector<std::vector<long long>> counts(
      static_cast<size_t>(2 * nv),
      std::vector<long long>(static_cast<size_t>(2 * nh), 0));
  for (const Square& s : c.squares) {
    ++counts[static_cast<size_t>(2 * s.v)][static_cast<size_t>(2 * s.h1)];
    ++counts[static_cast<size_t>(2 * s.v + 1)][static_cast<size_t>(2 * s.h)];
    ++counts[static_cast<size_t>(2 * s.v1 + 1)][static_cast<size_t>(2 * s.h + 1)];
    ++counts[static_cast<size_t>(2 * s.v1)][static_cast<size_t>(2 * s.h1 + 1)];
  }
  LinkStatus status;
  status.counts = counts;
  status.total_corners = 4LL * static_cast<long long>(c.squares.size());
  for (int gv = 0; gv < 2 * nv; ++gv) {
    for (int gh = 0; gh < 2 * nh; ++gh) {
      long long k = counts[static_cast<size_t>(gv)][static_cast<size_t>(gh)];
      if (k != 1) {
        status.defects.push_back(CornerDefect{gv % 2 == 0, gv / 2,
                                              gh % 2 == 0, gh / 2, k});
      }
    }
  }
  return status;
}

bool is_complete(const SquareComplex& c) { return link_status(c).complete(); }

Presentation fundamental_presentation(const SquareComplex& c) {
  Presentation p;
  p.vertical_generators = c.vertical_labels;
  p.horizontal_generators = c.horizontal_labels;
  p.relations.reserve(c.squares.size());
  for (const Square& s : c.squares) {
    p.relations.push_back(Presentation::Relation{s.v, s.h, s.v1, s.h1});
  }
  return p;
}

Presentation fundamental_presentation(const MealyAutomaton& a) {
  return fundamental_presentation(complex_from_automaton(a));
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream out;
  out << "generators (vertical):";
  for (const auto& g : p.vertical_generators) out << ' ' << g;
  out << "\ngenerators (horizontal):";
  for (const auto& g : p.horizontal_generators) out << ' ' << g;
  out << "\nrelations (" << p.relations.size() << "):\n";
  for (const auto& r : p.relations) {
    out << p.vertical_generators[static_cast<size_t>(r.q)] << " * "
        << p.horizontal_generators[static_cast<size_t>(r.x)] << " * "
        << p.vertical_generators[static_cast<size_t>(r.lq)] << "^-1 * "
        << p.horizontal_generators[static_cast<size_t>(r.mx)] << "^-1\n";
  }
  out << "note: subgroups generated by Q and X are free\n";
  const size_t nv = p.vertical_generators.size();
  if (nv == p.horizontal_generators.size()) {
    const long long n = static_cast<long long>(nv);
    out << "hnn: base free group rank " << n << "; associated subgroup rank "
        << (n * n - n + 1) << "; index " << n << "\n";
  }
  return out.str();
}

nlohmann::ordered_json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"]["vertical"] = p.vertical_generators;
  j["generators"]["horizontal"] = p.horizontal_generators;
  auto relations = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) {
    nlohmann::ordered_json rel;
    rel["relator"] = {p.vertical_generators[static_cast<size_t>(r.q)],
                      p.horizontal_generators[static_cast<size_t>(r.x)],
                      p.vertical_generators[static_cast<size_t>(r.lq)] + "^-1",
                      p.horizontal_generators[static_cast<size_t>(r.mx)] + "^-1"};
    rel["left"] = p.vertical_generators[static_cast<size_t>(r.q)] + " " +
                  p.horizontal_generators[static_cast<size_t>(r.x)];
    rel["right"] = p.horizontal_generators[static_cast<size_t>(r.mx)] + " " +
                   p.vertical_generators[static_cast<size_t>(r.lq)];
    relations.push_back(std::move(rel));
  }
  j["relations"] = std::move(relations);
  j["notes"] = nlohmann::ordered_json::array(
      {"subgroups generated by Q and X are free"});
  const size_t nv = p.vertical_generators.size();
  if (nv == p.horizontal_generators.size()) {
    const long long n = static_cast<long long>(nv);
    j["hnn"]["base_free_rank"] = n;
    j["hnn"]["associated_subgroup_rank"] = n * n - n + 1;
    j["hnn"]["associated_subgroup_index"] = n;
  }
  return j;
}

CellCensus cell_census(const SquareComplex& c) {
  return CellCensus{1,
                    2LL * (static_cast<long long>(c.vertical_count()) +
                           static_cast<long long>(c.horizontal_count())),
                    static_cast<long long>(c.squares.size())};
}

nlohmann::ordered_json complex_to_json(const SquareComplex& c) {
  nlohmann::ordered_json j;
  j["vertical"] = c.vertical_labels;
  j["horizontal"] = c.horizontal_labels;
  auto squares = nlohmann::ordered_json::array();
  for (const Square& s : c.squares) {
    squares.push_back({s.v, s.h, s.v1, s.h1});
  }
  j["squares"] = std::move(squares);
  return j;
}

SquareComplex complex_from_json(const nlohmann::json& j) {
  SquareComplex c;
  c.vertical_labels = j.at("vertical").get<std::vector<std::string>>();
  c.horizontal_labels = j.at("horizontal").get<std::vector<std::string>>();
  for (const auto& row : j.at("squares")) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("square entry must be [v, h, v1, h1]");
    }
    c.squares.push_back(
        Square{row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
               row[3].get<int>()});
  }
  c.validate();
  return c;
}

nlohmann::ordered_json link_status_to_json(const SquareComplex& c) {
  LinkStatus status = link_status(c);
  nlohmann::ordered_json j;
  j["complete"] = status.complete();
  j["total_corners"] = status.total_corners;
  auto defects = nlohmann::ordered_json::array();
  size_t limit = 0;
  for (const auto& d : status.defects) {
    if (++limit > 32) break;
    nlohmann::ordered_json e;
    e["vertical_germ"] = c.vertical_labels[static_cast<size_t>(d.v)] +
                         (d.v_outgoing ? "+" : "-");
    e["horizontal_germ"] = c.horizontal_labels[static_cast<size_t>(d.h)] +
                           (d.h_outgoing ? "+" : "-");
    e["count"] = d.count;
    defects.push_back(std::move(e));
  }
  j["defect_count"] = status.defects.size();
  j["defects"] = std::move(defects);
  return j;
}

std::string complex_to_dot(const SquareComplex& c) {
  std::ostringstream out;
  out << "graph link {\n  layout=neato;\n";
  for (const auto& v : c.vertical_labels) {
    out << "  \"" << v << "+\";\n  \"" << v << "-\";\n";
  }
  for (const auto& h : c.horizontal_labels) {
    out << "  \"" << h << "+\";\n  \"" << h << "-\";\n";
  }
  for (const Square& s : c.squares) {
    const auto& vs = c.vertical_labels;
    const auto& hs = c.horizontal_labels;
    out << "  \"" << vs[static_cast<size_t>(s.v)] << "+\" -- \""
        << hs[static_cast<size_t>(s.h1)] << "+\";\n";
    out << "  \"" << vs[static_cast<size_t>(s.v)] << "-\" -- \""
        << hs[static_cast<size_t>(s.h)] << "+\";\n";
    out << "  \"" << vs[static_cast<size_t>(s.v1)] << "-\" -- \""
        << hs[static_cast<size_t>(s.h)] << "-\";\n";
    out << "  \"" << vs[static_cast<size_t>(s.v1)] << "+\" -- \""
        << hs[static_cast<size_t>(s.h1)] << "-\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string squares_to_dot(const SquareComplex& c) {
  std::ostringstream out;
  out << "digraph squares {\n  node [shape=record];\n";
  for (size_t k = 0; k < c.squares.size(); ++k) {
    const Square& s = c.squares[k];
    out << "  sq" << k << " [label=\"{"
        << c.horizontal_labels[static_cast<size_t>(s.h)] << "|"
        << c.vertical_labels[static_cast<size_t>(s.v)] << "}|{"
        << c.vertical_labels[static_cast<size_t>(s.v1)] << "|"
        << c.horizontal_labels[static_cast<size_t>(s.h1)] << "}\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace autgrp
