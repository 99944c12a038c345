#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chkit {

// Nodes are 4-valent with counterclockwise slots 0..3.
//   Crossing:     the under-strand occupies slots {0,2}, the over-strand {1,3}.
//   MarkedVertex: the marker sits in the corners between slots (0,1) and (2,3);
//                 the negative smoothing joins 0-1 and 2-3, the positive 1-2 and 3-0.
// Rotating a node's slot tuple by two positions encodes the same object; the
// canonical form and the pattern matcher treat such codes as equal.
enum class NodeKind : uint8_t { Crossing, MarkedVertex };

struct SlotRef {
  int node = -1;
  int slot = -1;
  bool operator==(const SlotRef&) const = default;
  bool operator<(const SlotRef& o) const {
    return node != o.node ? node < o.node : slot < o.slot;
  }
};

struct Node {
  NodeKind kind;
  std::array<int, 4> edge;  // edge id per slot
};

struct Edge {
  SlotRef a, b;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

// Abstract 4-valent diagram code.  Planar realizability is not tracked.
struct Diagram {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int free_loops = 0;

  int node_count(NodeKind k) const;
  int crossings() const { return node_count(NodeKind::Crossing); }
  int marked_vertices() const { return node_count(NodeKind::MarkedVertex); }
  bool classical() const { return marked_vertices() == 0; }

  SlotRef other_end(int edge_id, const SlotRef& from) const;
  int edge_at(const SlotRef& s) const { return nodes[s.node].edge[s.slot]; }

  void check_valid() const;  // throws std::logic_error on broken invariants
};

// ---- text format -------------------------------------------------------
//   node <name> = X(a,b,c,d)   crossing, slots 0..3
//   node <name> = M(a,b,c,d)   marked vertex
//   loops <n>                  free loops
//   # comment
// Edge tokens appear exactly twice.
Diagram parse_mgd(const std::string& text);
std::string serialize_mgd(const Diagram& d);  // canonical form
Diagram canonical(const Diagram& d);
std::string canonical_text(const Diagram& d);
uint64_t canonical_hash(const Diagram& d);

enum class Sign : int8_t { Minus = -1, Plus = 1 };

// Smooths every marked vertex: Minus joins slots 0-1 and 2-3, Plus joins
// 1-2 and 3-0.  Smoothing arcs that close up become free loops.
Diagram resolve(const Diagram& d, Sign sign);

struct ComponentLabeling {
  int count = 0;
  std::vector<int> edge_component;  // component id per edge, canonical order
  int loop_component_base = 0;      // free loop i has id base + i
};

// Link components of a classical diagram: strands continue through
// crossings (0<->2, 1<->3).
ComponentLabeling link_components(const Diagram& d);

// Surface-sheet components: crossings connect 0-2 and 1-3 separately, a
// marked vertex merges all four incident edges.
ComponentLabeling surface_components(const Diagram& d);

// chi(S(D)) = c(L+) + c(L-) - #marked vertices.
int euler_characteristic(const Diagram& d);

// Deterministic pseudo-random valid diagram, for property tests.
Diagram random_diagram(uint64_t seed, int max_nodes = 6);

}  // namespace chkit
