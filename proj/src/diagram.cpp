#include "chkit/diagram.hpp"

#include <algorithm>
#include <random>

namespace chkit {

int Diagram::node_count(NodeKind k) const {
  int n = 0;
  for (const auto& nd : nodes)
    if (nd.kind == k) ++n;
  return n;
}

SlotRef Diagram::other_end(int edge_id, const SlotRef& from) const {
  const Edge& e = edges[edge_id];
  return (e.a == from) ? e.b : e.a;
}

void Diagram::check_valid() const {
  std::vector<int> seen(edges.size(), 0);
  for (int n = 0; n < static_cast<int>(nodes.size()); ++n) {
    for (int s = 0; s < 4; ++s) {
      int e = nodes[n].edge[s];
      if (e < 0 || e >= static_cast<int>(edges.size()))
        throw std::logic_error("diagram: bad edge id");
      const Edge& ed = edges[e];
      SlotRef here{n, s};
      if (!(ed.a == here) && !(ed.b == here))
        throw std::logic_error("diagram: slot/edge tables disagree");
      ++seen[e];
    }
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    if (seen[e] != 2) throw std::logic_error("diagram: edge not matching two slots");
    if (edges[e].a == edges[e].b) throw std::logic_error("diagram: degenerate edge");
  }
  if (free_loops < 0) throw std::logic_error("diagram: negative loops");
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

ComponentLabeling label_from_uf(const Diagram& d, UnionFind& uf) {
  ComponentLabeling out;
  out.edge_component.assign(d.edges.size(), -1);
  int next = 0;
  std::vector<int> root_to_id(d.edges.size(), -1);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    int r = uf.find(static_cast<int>(e));
    if (root_to_id[r] < 0) root_to_id[r] = next++;
    out.edge_component[e] = root_to_id[r];
  }
  out.loop_component_base = next;
  out.count = next + d.free_loops;
  return out;
}

}  // namespace

ComponentLabeling link_components(const Diagram& d) {
  UnionFind uf(static_cast<int>(d.edges.size()));
  for (const auto& n : d.nodes) {
    if (n.kind == NodeKind::Crossing) {
      uf.unite(n.edge[0], n.edge[2]);
      uf.unite(n.edge[1], n.edge[3]);
    } else {
      // link_components is meant for classical diagrams; treat a marked
      // vertex like its negative smoothing so callers get a defined answer
      uf.unite(n.edge[0], n.edge[1]);
      uf.unite(n.edge[2], n.edge[3]);
    }
  }
  return label_from_uf(d, uf);
}

ComponentLabeling surface_components(const Diagram& d) {
  UnionFind uf(static_cast<int>(d.edges.size()));
  for (const auto& n : d.nodes) {
    if (n.kind == NodeKind::Crossing) {
      uf.unite(n.edge[0], n.edge[2]);
      uf.unite(n.edge[1], n.edge[3]);
    } else {
      uf.unite(n.edge[0], n.edge[1]);
      uf.unite(n.edge[1], n.edge[2]);
      uf.unite(n.edge[2], n.edge[3]);
    }
  }
  return label_from_uf(d, uf);
}

int euler_characteristic(const Diagram& d) {
  int cp = link_components(resolve(d, Sign::Plus)).count;
  int cm = link_components(resolve(d, Sign::Minus)).count;
  return cp + cm - d.marked_vertices();
}

Diagram random_diagram(uint64_t seed, int max_nodes) {
  std::mt19937_64 rng(seed);
  Diagram d;
  int n = 1 + static_cast<int>(rng() % max_nodes);
  d.nodes.resize(n);
  std::vector<SlotRef> slots;
  for (int i = 0; i < n; ++i) {
    d.nodes[i].kind = (rng() % 2) ? NodeKind::Crossing : NodeKind::MarkedVertex;
    for (int s = 0; s < 4; ++s) slots.push_back({i, s});
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  for (size_t i = 0; i < slots.size(); i += 2) {
    int e = static_cast<int>(d.edges.size());
    d.edges.push_back({slots[i], slots[i + 1]});
    d.nodes[slots[i].node].edge[slots[i].slot] = e;
    d.nodes[slots[i + 1].node].edge[slots[i + 1].slot] = e;
  }
  d.free_loops = static_cast<int>(rng() % 3);
  return d;
}

}  // namespace chkit
