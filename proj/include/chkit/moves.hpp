#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chkit/diagram.hpp"
#include "chkit/verdict.hpp"

namespace chkit {

enum class MoveId { O1, O2, O3, O4, O4p, O5, O6, O6p, O7, O8, H1, H2, H3, H4 };
enum class Dir { Forward, Backward };

std::string move_name(MoveId m);
std::optional<MoveId> move_from_name(const std::string& s);
std::vector<MoveId> parse_move_list(const std::string& spec);  // "O1..O7,O4p,O6p"
std::vector<MoveId> generating_moves();                        // the ten Omega moves
std::vector<MoveId> nine_moves();                              // all Omegas except O8

// One side of a move variant: either a small tangle (nodes with internal
// edges and numbered boundary legs) or a set of plain strands (wires joining
// leg pairs, matching any diagram edge or free loop).
struct PatternSide {
  std::vector<Node> nodes;                       // conn via edge ids below
  std::vector<std::array<SlotRef, 2>> edges;     // internal edges
  std::vector<SlotRef> leg_attach;               // per leg; {-1,-1} when wire side
  std::vector<std::pair<int, int>> wires;        // leg pairs
  int legs = 0;

  bool wire_side() const { return nodes.empty(); }
};

struct MoveVariant {
  std::string name;
  PatternSide lhs, rhs;
};

struct MoveDef {
  MoveId id = MoveId::O1;
  bool generating = true;  // H1..H4 are derived relations
  std::vector<MoveVariant> variants;
  std::vector<std::pair<int, int>> closure;  // leg wiring used by verify_h
};

const MoveDef& move_def(MoveId m);

// A located match of one variant side in a diagram.
struct MoveSite {
  MoveId move = MoveId::O1;
  Dir dir = Dir::Forward;
  int variant = 0;
  std::vector<int> nodes;       // diagram node per pattern node
  std::vector<int> shifts;      // slot rotation (0 or 2) per pattern node
  std::vector<int> wire_edge;   // per wire: edge id, or -1 for a free loop
  std::vector<int> wire_flip;   // per wire: 0/1 endpoint orientation
  uint64_t diagram_hash = 0;

  std::string describe() const;
};

struct StaleSiteError : std::runtime_error {
  StaleSiteError() : std::runtime_error("stale move site: diagram changed since enumeration") {}
};

std::vector<MoveSite> find_move_sites(const Diagram& d, MoveId m, Dir dir = Dir::Forward);

struct ApplyResult {
  Diagram diagram;          // raw result (not canonicalized)
  MoveSite reverse_site;    // applies the move back at the same spot
};

ApplyResult apply_move_ex(const Diagram& d, const MoveSite& site);
Diagram apply_move(const Diagram& d, const MoveSite& site);

// Seeded walk; each step picks uniformly among applicable (move, direction)
// pairs from `allowed`, then a uniform site.  Steps with no applicable move
// are skipped.  Returns the canonical diagram.
Diagram random_walk(const Diagram& d, const std::vector<MoveId>& allowed, int steps,
                    uint64_t seed);

struct DerivationStep {
  MoveId move;
  Dir dir;
  int variant;
  int site_index;
};

struct HRelationReport {
  MoveId relation;
  Tri found = Tri::Unknown;
  std::vector<DerivationStep> sequence;
  int states_explored = 0;
};

// For each H relation, searches for a derivation of its closed left side to
// its closed right side using the nine generating moves (all but O8).
std::vector<HRelationReport> verify_h_relations(int budget);

// Best-first search from `from` to `to` over the given moves; used by
// verify_h and exposed for tests.
std::optional<std::vector<DerivationStep>> derive(const Diagram& from, const Diagram& to,
                                                  const std::vector<MoveId>& moves, int budget,
                                                  int* states_out = nullptr);

Diagram closed_side(MoveId relation, Dir side);  // closure diagrams for H checks

}  // namespace chkit
