#include <algorithm>
#include <map>
#include <sstream>

#include "chkit/diagram.hpp"

namespace chkit {

namespace {

struct Emission {
  std::string text;
  std::vector<int> component_nodes;  // original ids, discovery order
};

// Deterministic traversal from one starting slot.  A node first entered via
// slot p is emitted with its tuple rotated by 2 when p >= 2, which
// identifies the two equivalent codes of each node.
Emission emit_component(const Diagram& d, int start_node, int start_slot,
                        int node_label_base, int edge_label_base) {
  Emission out;
  std::map<int, int> node_label;   // original -> label index
  std::map<int, int> node_shift;   // original -> 0 or 2
  std::map<int, int> edge_label;   // edge id -> label index

  auto visit = [&](int n, int entry_slot) {
    node_label[n] = node_label_base + static_cast<int>(out.component_nodes.size());
    node_shift[n] = entry_slot >= 2 ? 2 : 0;
    out.component_nodes.push_back(n);
  };
  visit(start_node, start_slot);

  std::ostringstream text;
  for (size_t qi = 0; qi < out.component_nodes.size(); ++qi) {
    int n = out.component_nodes[qi];
    int shift = node_shift[n];
    const Node& node = d.nodes[n];
    text << "node n" << node_label[n] << " = "
         << (node.kind == NodeKind::Crossing ? "X" : "M") << "(";
    for (int j = 0; j < 4; ++j) {
      int slot = (j + shift) % 4;
      int e = node.edge[slot];
      auto it = edge_label.find(e);
      if (it == edge_label.end()) {
        it = edge_label.emplace(e, edge_label_base + static_cast<int>(edge_label.size())).first;
        SlotRef far = d.other_end(e, SlotRef{n, slot});
        if (!node_label.count(far.node)) visit(far.node, far.slot);
      }
      text << (j ? "," : "") << "e" << it->second;
    }
    text << ")\n";
  }
  out.text = text.str();
  return out;
}

}  // namespace

std::string canonical_text(const Diagram& d) {
  std::ostringstream out;
  std::vector<bool> visited(d.nodes.size(), false);
  int node_base = 0;
  int edge_base = 0;
  while (true) {
    Emission best;
    bool found = false;
    for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
      if (visited[n]) continue;
      for (int s = 0; s < 4; ++s) {
        Emission cand = emit_component(d, n, s, node_base, edge_base);
        if (!found || cand.text < best.text) {
          best = std::move(cand);
          found = true;
        }
      }
    }
    if (!found) break;
    out << best.text;
    for (int n : best.component_nodes) visited[n] = true;
    node_base += static_cast<int>(best.component_nodes.size());
    edge_base += 2 * static_cast<int>(best.component_nodes.size());
  }
  if (d.free_loops > 0 || d.nodes.empty()) out << "loops " << d.free_loops << "\n";
  return out.str();
}

std::string serialize_mgd(const Diagram& d) { return canonical_text(d); }

Diagram canonical(const Diagram& d) { return parse_mgd(canonical_text(d)); }

uint64_t canonical_hash(const Diagram& d) {
  uint64_t h = 1469598103934665603ull;
  for (char c : canonical_text(d)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace chkit
