#include <array>

#include "chkit/diagram.hpp"

namespace chkit {

Diagram resolve(const Diagram& d, Sign sign) {
  Diagram out;
  out.free_loops = d.free_loops;

  std::vector<int> new_id(d.nodes.size(), -1);
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind == NodeKind::Crossing) {
      new_id[n] = static_cast<int>(out.nodes.size());
      out.nodes.push_back({NodeKind::Crossing, {-1, -1, -1, -1}});
    }
  }

  // endpoint index: 2*edge + (0 for edge.a, 1 for edge.b)
  auto endpoint_of = [&](const SlotRef& sr) {
    int e = d.nodes[sr.node].edge[sr.slot];
    return 2 * e + ((d.edges[e].a == sr) ? 0 : 1);
  };
  auto slotref_of = [&](int ep) { return (ep & 1) ? d.edges[ep / 2].b : d.edges[ep / 2].a; };

  std::vector<int> partner(2 * d.edges.size(), -1);
  const std::array<std::pair<int, int>, 2> pairs =
      sign == Sign::Minus ? std::array<std::pair<int, int>, 2>{{{0, 1}, {2, 3}}}
                          : std::array<std::pair<int, int>, 2>{{{1, 2}, {3, 0}}};
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind != NodeKind::MarkedVertex) continue;
    for (auto [p, q] : pairs) {
      int ep = endpoint_of({n, p});
      int eq = endpoint_of({n, q});
      partner[ep] = eq;
      partner[eq] = ep;
    }
  }

  auto terminal = [&](int ep) {
    SlotRef sr = slotref_of(ep);
    return new_id[sr.node] >= 0;
  };

  std::vector<bool> consumed(2 * d.edges.size(), false);
  auto connect = [&](const SlotRef& a, const SlotRef& b) {
    int e = static_cast<int>(out.edges.size());
    SlotRef na{new_id[a.node], a.slot};
    SlotRef nb{new_id[b.node], b.slot};
    out.edges.push_back({na, nb});
    out.nodes[na.node].edge[na.slot] = e;
    out.nodes[nb.node].edge[nb.slot] = e;
  };

  for (int ep = 0; ep < static_cast<int>(2 * d.edges.size()); ++ep) {
    if (consumed[ep] || !terminal(ep)) continue;
    int cur = ep;
    consumed[cur] = true;
    while (true) {
      int far = cur ^ 1;  // other end of the same edge
      consumed[far] = true;
      if (terminal(far)) {
        connect(slotref_of(ep), slotref_of(far));
        break;
      }
      cur = partner[far];
      consumed[cur] = true;
    }
  }
  // remaining unconsumed endpoints lie on closed smoothing cycles
  for (int ep = 0; ep < static_cast<int>(2 * d.edges.size()); ++ep) {
    if (consumed[ep]) continue;
    int cur = ep;
    while (!consumed[cur]) {
      consumed[cur] = true;
      int far = cur ^ 1;
      consumed[far] = true;
      cur = partner[far];
    }
    ++out.free_loops;
  }

  out.check_valid();
  return out;
}

}  // namespace chkit
