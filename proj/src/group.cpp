#include "chkit/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chkit {

std::string Presentation::text() const {
  std::ostringstream o;
  o << "gens " << generators << " components " << components << "\n";
  for (int g = 0; g < generators; ++g) o << "c" << component[g] << (g + 1 < generators ? " " : "\n");
  if (generators == 0) o << "\n";
  for (const auto& r : relators) {
    for (auto [g, e] : r) o << "a" << g << (e > 0 ? " " : "' ");
    o << ";\n";
  }
  return o.str();
}

namespace {

struct ArcData {
  int count = 0;
  std::vector<int> arc_of_edge;       // per edge
  std::vector<bool> toward_b;         // per edge: arc direction
};

// Arcs: maximal edge chains through over-slots of crossings; they stop at
// under slots (0,2) and at every marked-vertex slot.
ArcData trace_arcs(const Diagram& d) {
  ArcData a;
  a.arc_of_edge.assign(d.edges.size(), -1);
  a.toward_b.assign(d.edges.size(), true);

  // endpoint = 2*edge + (0 for a, 1 for b); over-slots pair endpoints
  auto endpoint_of = [&](const SlotRef& sr) {
    int e = d.nodes[sr.node].edge[sr.slot];
    return 2 * e + ((d.edges[e].a == sr) ? 0 : 1);
  };
  std::vector<int> partner(2 * d.edges.size(), -1);
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (d.nodes[n].kind != NodeKind::Crossing) continue;
    int p1 = endpoint_of({n, 1});
    int p3 = endpoint_of({n, 3});
    partner[p1] = p3;
    partner[p3] = p1;
  }

  auto label_chain = [&](int start_ep, int arc) {
    // traverse edges from start_ep; direction of each edge is away from the
    // endpoint we enter it at
    int cur = start_ep;
    while (true) {
      int e = cur / 2;
      if (a.arc_of_edge[e] >= 0) break;
      a.arc_of_edge[e] = arc;
      a.toward_b[e] = (cur % 2 == 0);  // entered at a, flows toward b
      int far = cur ^ 1;
      if (partner[far] < 0) break;
      cur = partner[far];
    }
  };

  // open arcs start at endpoints without an over-partner
  for (int ep = 0; ep < static_cast<int>(2 * d.edges.size()); ++ep) {
    if (partner[ep] >= 0 || a.arc_of_edge[ep / 2] >= 0) continue;
    label_chain(ep, a.count++);
  }
  // leftover edges belong to closed over-circles
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    if (a.arc_of_edge[e] >= 0) continue;
    label_chain(2 * e, a.count++);
  }
  return a;
}

bool arc_flows_into(const Diagram& d, const ArcData& a, const SlotRef& s) {
  int e = d.edge_at(s);
  bool at_b = (d.edges[e].b == s);
  return at_b ? a.toward_b[e] : !a.toward_b[e];
}

Word normalize_word(Word w) {
  // free reduction
  Word out;
  for (auto t : w) {
    if (!out.empty() && out.back().first == t.first && out.back().second == -t.second)
      out.pop_back();
    else
      out.push_back(t);
  }
  return out;
}

std::string word_key(const Word& w) {
  std::ostringstream o;
  for (auto [g, e] : w) o << g << (e > 0 ? "+" : "-");
  return o.str();
}

}  // namespace

Presentation wirtinger_presentation(const Diagram& d, const std::vector<bool>* flip) {
  ArcData arcs = trace_arcs(d);
  ComponentLabeling comps = surface_components(d);

  Presentation p;
  p.generators = arcs.count + d.free_loops;
  p.component.resize(p.generators);
  std::vector<bool> arc_flip(p.generators, false);
  if (flip)
    for (size_t i = 0; i < flip->size() && i < arc_flip.size(); ++i) arc_flip[i] = (*flip)[i];

  // component per arc generator, plus free-loop generators
  std::map<int, int> comp_id;  // surface component -> dense id
  auto dense = [&](int c) {
    auto it = comp_id.find(c);
    if (it == comp_id.end()) it = comp_id.emplace(c, static_cast<int>(comp_id.size())).first;
    return it->second;
  };
  std::vector<int> arc_first_edge(arcs.count, -1);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (arc_first_edge[arcs.arc_of_edge[e]] < 0) arc_first_edge[arcs.arc_of_edge[e]] = e;
  for (int a = 0; a < arcs.count; ++a)
    p.component[a] = dense(comps.edge_component[arc_first_edge[a]]);
  for (int l = 0; l < d.free_loops; ++l)
    p.component[arcs.count + l] = dense(comps.loop_component_base + l);
  p.components = static_cast<int>(comp_id.size());

  auto meridian_exp = [&](const SlotRef& s, bool want_into) {
    // +1 when the arc's direction at this endpoint matches the wanted one
    int arc = arcs.arc_of_edge[d.edge_at(s)];
    bool into = arc_flows_into(d, arcs, s);
    if (arc_flip[arc]) into = !into;
    int e = (into == want_into) ? 1 : -1;
    return std::make_pair(arc, e);
  };

  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    const Node& node = d.nodes[n];
    if (node.kind == NodeKind::Crossing) {
      // normalized relation w^ = o^ u^ o^-1 with the under strand entering
      // at slot 0 and the over strand entering at slot 1
      auto [u, su] = meridian_exp({n, 0}, true);
      auto [w, sw] = meridian_exp({n, 2}, false);
      auto [ov, so] = meridian_exp({n, 1}, true);
      Word r;
      r.emplace_back(w, -sw);
      r.emplace_back(ov, so);
      r.emplace_back(u, su);
      r.emplace_back(ov, -so);
      r = normalize_word(r);
      if (!r.empty()) p.relators.push_back(r);
    } else {
      // channel relations g_p^{n_p} g_q^{n_q}; keep a canonical three of four
      static const int chan[4][2] = {{0, 1}, {2, 3}, {1, 2}, {3, 0}};
      std::vector<Word> rels;
      for (auto& ch : chan) {
        auto [gp, np] = meridian_exp({n, ch[0]}, true);
        auto [gq, nq] = meridian_exp({n, ch[1]}, true);
        // both meridians taken pointing into the vertex: the through-strand
        // enters one slot and leaves the other, so the relation reads
        // g_p^{np} * g_q^{nq} = 1 with np = +1 exactly when the arc points in
        Word r{{gp, np}, {gq, nq}};
        rels.push_back(normalize_word(r));
      }
      std::sort(rels.begin(), rels.end(),
                [](const Word& x, const Word& y) { return word_key(x) < word_key(y); });
      rels.pop_back();  // the fourth channel relation is a consequence
      for (auto& r : rels) p.relators.push_back(r);
    }
  }
  return p;
}

Diagram marker_switch(const Diagram& d, const std::vector<int>& vertices) {
  Diagram out = d;
  for (int v : vertices) {
    if (v < 0 || v >= static_cast<int>(out.nodes.size()) ||
        out.nodes[v].kind != NodeKind::MarkedVertex)
      throw std::invalid_argument("marker_switch: not a marked vertex: " + std::to_string(v));
    // left-rotate the slot tuple: new slot i carries the old slot i+1
    std::array<int, 4> ne;
    for (int i = 0; i < 4; ++i) ne[i] = out.nodes[v].edge[(i + 1) % 4];
    out.nodes[v].edge = ne;
    for (int i = 0; i < 4; ++i) {
      int e = ne[i];
      SlotRef old{v, (i + 1) % 4};
      if (out.edges[e].a == old)
        out.edges[e].a = SlotRef{v, i};
      else if (out.edges[e].b == old)
        out.edges[e].b = SlotRef{v, i};
    }
  }
  // self-edges at the rotated vertex may have had both endpoints moved; the
  // loop above handles each endpoint once because it rewrites in slot order
  out.check_valid();
  return out;
}

Presentation tietze_simplify(const Presentation& p, int budget) {
  Presentation cur = p;
  int steps = 0;
  bool changed = true;
  while (changed && steps < budget) {
    changed = false;
    // find a length-2 relator g^a h^b with g != h: substitute g = h^{-b a}
    for (size_t ri = 0; ri < cur.relators.size(); ++ri) {
      Word r = normalize_word(cur.relators[ri]);
      if (r.size() != 2 || r[0].first == r[1].first) continue;
      int g = r[0].first, a = r[0].second;
      int h = r[1].first, b = r[1].second;
      // g^a = h^{-b}  =>  g = h^{-b*a}
      int exp = -b * a;
      Presentation next;
      next.generators = cur.generators - 1;
      next.components = cur.components;
      auto remap = [&](int x) { return x < g ? x : x - 1; };
      next.component.resize(next.generators);
      for (int x = 0; x < cur.generators; ++x)
        if (x != g) next.component[remap(x)] = cur.component[x];
      for (size_t rj = 0; rj < cur.relators.size(); ++rj) {
        if (rj == ri) continue;
        Word w;
        for (auto [x, e] : cur.relators[rj]) {
          if (x == g)
            w.emplace_back(remap(h), exp * e);
          else
            w.emplace_back(remap(x), e);
        }
        w = normalize_word(w);
        if (!w.empty()) next.relators.push_back(w);
      }
      cur = std::move(next);
      changed = true;
      ++steps;
      break;
    }
    if (changed) continue;
    // drop duplicate relators
    std::map<std::string, bool> seen;
    std::vector<Word> kept;
    for (auto& r : cur.relators) {
      Word n = normalize_word(r);
      if (n.empty()) {
        changed = true;
        continue;
      }
      std::string k = word_key(n);
      Word inv;
      for (auto it = n.rbegin(); it != n.rend(); ++it) inv.emplace_back(it->first, -it->second);
      std::string ki = word_key(inv);
      if (seen.count(k) || seen.count(ki)) {
        changed = true;
        continue;
      }
      seen[k] = true;
      kept.push_back(n);
    }
    cur.relators = kept;
  }
  return cur;
}

std::vector<mpz_class> abelianization_fingerprint(const Presentation& p) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : p.relators) {
    std::vector<mpz_class> row(p.generators, 0);
    for (auto [g, e] : r) row[g] += e;
    m.push_back(std::move(row));
  }
  return group_invariant_factors(m, p.generators);
}

VarMap component_varmap(const Presentation& p) {
  VarMap vm;
  vm.arity = std::max(1, p.components);
  vm.var_of_gen = p.component;
  vm.exp_of_gen.assign(p.generators, 1);
  return vm;
}

LaurentPoly fox_derivative(const Word& w, int gen, const VarMap& vm) {
  LaurentPoly deriv(vm.arity);
  Exponents prefix(vm.arity, 0);
  for (auto [g, e] : w) {
    if (e > 0) {
      if (g == gen) deriv.add_term(prefix, 1);
      prefix[vm.var_of_gen[g]] += vm.exp_of_gen[g];
    } else {
      prefix[vm.var_of_gen[g]] -= vm.exp_of_gen[g];
      if (g == gen) deriv.add_term(prefix, -1);
    }
  }
  return deriv;
}

LaurentMatrix fox_jacobian(const Presentation& p, const VarMap& vm) {
  LaurentMatrix m = make_matrix(static_cast<int>(p.relators.size()), p.generators, vm.arity);
  for (int r = 0; r < m.rows; ++r)
    for (int g = 0; g < m.cols; ++g) m.at(r, g) = fox_derivative(p.relators[r], g, vm);
  return m;
}

IdealFingerprint elementary_ideal(const Presentation& p, const VarMap& vm, int k,
                                  bool shifted_convention) {
  int g = p.generators;
  if (g > 12)
    throw SizeError("elementary_ideal: presentation has " + std::to_string(g) +
                    " generators after simplification (limit 12)");
  int size = g - k - (shifted_convention ? 1 : 0);
  if (size <= 0) {
    return ideal_fingerprint({LaurentPoly::constant(vm.arity, 1)});
  }
  LaurentMatrix j = fox_jacobian(p, vm);
  if (size > j.rows || size > j.cols) return ideal_fingerprint({}, vm.arity);
  return ideal_fingerprint(minors(j, size), vm.arity);
}

}  // namespace chkit
