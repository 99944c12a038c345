#include "chkit/simplify.hpp"

#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "chkit/group.hpp"
#include "chkit/moves.hpp"
#include "chkit/orient.hpp"

namespace chkit {

namespace {

// crossings-then-text priority; insertions allowed up to start + slack
struct SearchState {
  int crossings;
  std::string text;
  bool operator>(const SearchState& o) const {
    return std::tie(crossings, text) > std::tie(o.crossings, o.text);
  }
};

}  // namespace

SimplifyResult simplify_classical(const Diagram& link, int budget) {
  SimplifyResult res;
  Diagram start = canonical(link);
  res.diagram = start;
  if (start.crossings() == 0) {
    res.crossingless = true;
    return res;
  }

  const int slack = 2;
  int limit = start.crossings() + slack;

  std::priority_queue<SearchState, std::vector<SearchState>, std::greater<SearchState>> open;
  std::set<std::string> seen;
  std::string st = canonical_text(start);
  open.push({start.crossings(), st});
  seen.insert(st);
  res.states = 1;

  int best = start.crossings();
  while (!open.empty() && res.states < budget) {
    SearchState cur = open.top();
    open.pop();
    Diagram d = parse_mgd(cur.text);
    if (cur.crossings < best) {
      best = cur.crossings;
      res.diagram = d;
      if (best == 0) {
        res.crossingless = true;
        return res;
      }
    }
    for (MoveId m : {MoveId::O1, MoveId::O2, MoveId::O3}) {
      for (Dir dir : {Dir::Backward, Dir::Forward}) {
        // Backward O1/O2 remove crossings; forward insertions and O3 slides
        // explore plateaus within the slack.
        auto sites = find_move_sites(d, m, dir);
        for (const auto& site : sites) {
          Diagram nd = apply_move(d, site);
          int nc = nd.crossings();
          if (nc > limit) continue;
          std::string nt = canonical_text(nd);
          if (!seen.insert(nt).second) continue;
          ++res.states;
          if (nc == 0) {
            res.diagram = parse_mgd(nt);
            res.crossingless = true;
            return res;
          }
          if (res.states >= budget) break;
          open.push({nc, nt});
        }
        if (res.states >= budget) break;
      }
      if (res.states >= budget) break;
    }
  }
  res.diagram = canonical(res.diagram);
  res.crossingless = res.diagram.crossings() == 0;
  return res;
}

int total_linking_obstruction(const Diagram& link) {
  Orientation o = orientation_from_bits(link, std::vector<int>(lminus_component_count(link), 0));
  ComponentLabeling comps = link_components(link);
  int total = 0;
  for (int n = 0; n < static_cast<int>(link.nodes.size()); ++n) {
    const Node& node = link.nodes[n];
    if (node.kind != NodeKind::Crossing) continue;
    int cu = comps.edge_component[node.edge[0]];
    int co = comps.edge_component[node.edge[1]];
    if (cu == co) continue;
    // sign: +1 when with the under strand directed 0->2 the over strand
    // is directed 1->3
    bool under_in_at_0 = flows_into(link, o, {n, 0});
    bool over_in_at_1 = flows_into(link, o, {n, 1});
    total += (under_in_at_0 == over_in_at_1) ? 1 : -1;
  }
  return total / 2;
}

Tri is_trivial_link(const Diagram& link, int budget) {
  if (!link.classical())
    throw std::invalid_argument("is_trivial_link: diagram has marked vertices");
  Diagram d = canonical(link);
  if (d.crossings() == 0) return Tri::Yes;

  // cheap certificates first: they are budget-independent, keeping the
  // verdict monotone
  if (total_linking_obstruction(d) != 0) return Tri::No;

  int c = link_components(d).count;
  bool ideal_obstruction = false;
  try {
    Presentation p = tietze_simplify(wirtinger_presentation(d));
    if (p.generators <= 12) {
      IdealFingerprint fp = elementary_ideal(p, component_varmap(p), 1);
      if (c == 1) {
        // unknot has E_1 = <1>
        IdealFingerprint unit = ideal_fingerprint({LaurentPoly::constant(1, 1)});
        ideal_obstruction = fingerprint_equal(fp, unit).verdict == Tri::No;
      } else {
        // unlink has E_1 = <0>
        ideal_obstruction = !fp.is_zero();
      }
    }
  } catch (const SizeError&) {
  }
  if (ideal_obstruction) return Tri::No;

  SimplifyResult s = simplify_classical(d, budget);
  if (s.crossingless) return Tri::Yes;
  return Tri::Unknown;
}

Tri is_admissible(const Diagram& d, int budget) {
  Tri plus = is_trivial_link(resolve(d, Sign::Plus), budget);
  if (plus == Tri::No) return Tri::No;
  Tri minus = is_trivial_link(resolve(d, Sign::Minus), budget);
  if (minus == Tri::No) return Tri::No;
  if (plus == Tri::Yes && minus == Tri::Yes) return Tri::Yes;
  return Tri::Unknown;
}

}  // namespace chkit
