#include "chkit/orient.hpp"

#include <stdexcept>

namespace chkit {

namespace {

// For the L- smoothing, the strand entering a node at slot s leaves at:
//   crossing: s+2 (strands pass through)
//   vertex:   the channel partner within {0,1} or {2,3}
int lminus_partner_slot(const Node& n, int s) {
  if (n.kind == NodeKind::Crossing) return (s + 2) % 4;
  static const int partner[4] = {1, 0, 3, 2};
  return partner[s];
}

struct Circuits {
  std::vector<int> edge_component;   // per edge
  std::vector<bool> toward_b_base;   // default direction per edge
  int count = 0;                     // edge circuits (free loops not included)
};

Circuits trace_circuits(const Diagram& d) {
  Circuits c;
  c.edge_component.assign(d.edges.size(), -1);
  c.toward_b_base.assign(d.edges.size(), true);
  for (int e0 = 0; e0 < static_cast<int>(d.edges.size()); ++e0) {
    if (c.edge_component[e0] >= 0) continue;
    int comp = c.count++;
    int e = e0;
    SlotRef head = d.edges[e0].b;  // traverse e0 from a to b
    bool toward = true;
    while (c.edge_component[e] < 0) {
      c.edge_component[e] = comp;
      c.toward_b_base[e] = toward;
      int ps = lminus_partner_slot(d.nodes[head.node], head.slot);
      SlotRef next{head.node, ps};
      int ne = d.edge_at(next);
      toward = (d.edges[ne].a == next);
      head = toward ? d.edges[ne].b : d.edges[ne].a;
      e = ne;
    }
  }
  return c;
}

}  // namespace

int lminus_component_count(const Diagram& d) {
  return trace_circuits(d).count + d.free_loops;
}

Orientation orientation_from_bits(const Diagram& d, const std::vector<int>& bits) {
  Circuits c = trace_circuits(d);
  int total = c.count + d.free_loops;
  if (static_cast<int>(bits.size()) != total)
    throw std::invalid_argument("orientation bits: expected " + std::to_string(total) +
                                " bits, got " + std::to_string(bits.size()));
  Orientation o;
  o.bits = bits;
  o.toward_b.resize(d.edges.size());
  for (size_t e = 0; e < d.edges.size(); ++e) {
    bool base = c.toward_b_base[e];
    o.toward_b[e] = bits[c.edge_component[e]] ? !base : base;
  }
  return o;
}

std::vector<Orientation> enumerate_orientations(const Diagram& d) {
  int total = lminus_component_count(d);
  std::vector<Orientation> out;
  if (total > 20) throw std::invalid_argument("too many components to enumerate orientations");
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    std::vector<int> bits(total);
    for (int i = 0; i < total; ++i) bits[i] = (mask >> i) & 1;
    out.push_back(orientation_from_bits(d, bits));
  }
  return out;
}

bool flows_into(const Diagram& d, const Orientation& o, const SlotRef& s) {
  int e = d.edge_at(s);
  bool at_b = (d.edges[e].b == s);
  return at_b ? o.toward_b[e] : !o.toward_b[e];
}

std::vector<VType> vertex_types(const Diagram& d, const Orientation& o) {
  std::vector<VType> out(d.nodes.size(), VType::D);
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind != NodeKind::MarkedVertex) continue;
    bool in0 = flows_into(d, o, {n, 0});
    bool in2 = flows_into(d, o, {n, 2});
    out[n] = (in0 == in2) ? VType::D : VType::E;
  }
  return out;
}

Diagram twist(const Diagram& d, const Orientation& o, const TwistRule& rule) {
  std::vector<VType> types = vertex_types(d, o);
  Diagram out = d;
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind != NodeKind::MarkedVertex || types[n] != VType::E) continue;
    // pick the channel: {0,1} or {2,3}, relative to the flow
    bool out_at_0 = !flows_into(d, o, {n, 0});
    int c0;
    if (rule.at_out_channel)
      c0 = out_at_0 ? 0 : 2;
    else
      c0 = out_at_0 ? 2 : 0;
    int c1 = c0 + 1;

    int e0 = out.nodes[n].edge[c0];
    int e1 = out.nodes[n].edge[c1];
    int cnode = static_cast<int>(out.nodes.size());
    out.nodes.push_back({NodeKind::Crossing, {-1, -1, -1, -1}});

    auto retarget = [&](int edge, SlotRef from, SlotRef to) {
      if (out.edges[edge].a == from)
        out.edges[edge].a = to;
      else
        out.edges[edge].b = to;
      out.nodes[to.node].edge[to.slot] = edge;
    };
    auto new_edge = [&](SlotRef x, SlotRef y) {
      int id = static_cast<int>(out.edges.size());
      out.edges.push_back({x, y});
      out.nodes[x.node].edge[x.slot] = id;
      out.nodes[y.node].edge[y.slot] = id;
    };

    if (rule.first_strand_over) {
      // strand from slot c1 passes over: e0 lands at the over exit
      retarget(e1, {n, c1}, {cnode, 2});
      retarget(e0, {n, c0}, {cnode, 3});
      new_edge({n, c0}, {cnode, 0});
      new_edge({n, c1}, {cnode, 1});
    } else {
      retarget(e0, {n, c0}, {cnode, 2});
      retarget(e1, {n, c1}, {cnode, 3});
      new_edge({n, c1}, {cnode, 0});
      new_edge({n, c0}, {cnode, 1});
    }
  }
  out.check_valid();
  return out;
}

Diagram double_vertices(const Diagram& d) {
  Diagram out;
  out.free_loops = d.free_loops;
  std::vector<int> first_id(d.nodes.size(), -1);
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    first_id[n] = static_cast<int>(out.nodes.size());
    out.nodes.push_back({d.nodes[n].kind, {-1, -1, -1, -1}});
    if (d.nodes[n].kind == NodeKind::MarkedVertex)
      out.nodes.push_back({NodeKind::MarkedVertex, {-1, -1, -1, -1}});
  }
  auto target = [&](SlotRef s) {
    if (d.nodes[s.node].kind != NodeKind::MarkedVertex) return SlotRef{first_id[s.node], s.slot};
    // slots 0,1 stay on the original saddle, slots 2,3 move to the dual one
    switch (s.slot) {
      case 0: return SlotRef{first_id[s.node], 0};
      case 1: return SlotRef{first_id[s.node], 1};
      case 2: return SlotRef{first_id[s.node] + 1, 1};
      default: return SlotRef{first_id[s.node] + 1, 2};
    }
  };
  for (const auto& e : d.edges) {
    int id = static_cast<int>(out.edges.size());
    SlotRef na = target(e.a), nb = target(e.b);
    out.edges.push_back({na, nb});
    out.nodes[na.node].edge[na.slot] = id;
    out.nodes[nb.node].edge[nb.slot] = id;
  }
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind != NodeKind::MarkedVertex) continue;
    int va = first_id[n], vb = first_id[n] + 1;
    int p = static_cast<int>(out.edges.size());
    out.edges.push_back({SlotRef{va, 2}, SlotRef{vb, 0}});
    out.nodes[va].edge[2] = p;
    out.nodes[vb].edge[0] = p;
    int q = static_cast<int>(out.edges.size());
    out.edges.push_back({SlotRef{va, 3}, SlotRef{vb, 3}});
    out.nodes[va].edge[3] = q;
    out.nodes[vb].edge[3] = q;
  }
  out.check_valid();
  return out;
}

Diagram mirror_cut(const Diagram& d, const Orientation& o, const TwistRule& rule) {
  return double_vertices(twist(d, o, rule));
}

int mc_euler_by_table(const Diagram& d) {
  int cm = link_components(resolve(d, Sign::Minus)).count;
  return 2 * cm - 2 * d.marked_vertices();
}

Diagram insert_stabilization(const Diagram& d, int edge_id) {
  Diagram out = d;
  int v1 = static_cast<int>(out.nodes.size());
  out.nodes.push_back({NodeKind::MarkedVertex, {-1, -1, -1, -1}});
  int v2 = static_cast<int>(out.nodes.size());
  out.nodes.push_back({NodeKind::MarkedVertex, {-1, -1, -1, -1}});
  auto new_edge = [&](SlotRef x, SlotRef y) {
    int id = static_cast<int>(out.edges.size());
    out.edges.push_back({x, y});
    out.nodes[x.node].edge[x.slot] = id;
    out.nodes[y.node].edge[y.slot] = id;
    return id;
  };
  // legL at v1 slot 0, legR at v2 slot 0; rungs: top v1.1-v2.3, middle
  // v1.2-v2.2, bottom v1.3-v2.1.  Both resolutions keep a single arc.
  if (edge_id < 0) {
    if (out.free_loops <= 0) throw std::invalid_argument("no free loop to stabilize");
    --out.free_loops;
    new_edge({v1, 0}, {v2, 0});
  } else {
    SlotRef b = out.edges[edge_id].b;
    out.edges[edge_id].b = SlotRef{v1, 0};
    out.nodes[v1].edge[0] = edge_id;
    new_edge({v2, 0}, b);
  }
  new_edge({v1, 1}, {v2, 3});
  new_edge({v1, 2}, {v2, 2});
  new_edge({v1, 3}, {v2, 1});
  out.check_valid();
  return out;
}

}  // namespace chkit
