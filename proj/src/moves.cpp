#include "chkit/moves.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace chkit {

const std::map<std::string, std::string>& embedded_data();  // generated TU

std::string move_name(MoveId m) {
  switch (m) {
    case MoveId::O1: return "O1";
    case MoveId::O2: return "O2";
    case MoveId::O3: return "O3";
    case MoveId::O4: return "O4";
    case MoveId::O4p: return "O4p";
    case MoveId::O5: return "O5";
    case MoveId::O6: return "O6";
    case MoveId::O6p: return "O6p";
    case MoveId::O7: return "O7";
    case MoveId::O8: return "O8";
    case MoveId::H1: return "H1";
    case MoveId::H2: return "H2";
    case MoveId::H3: return "H3";
    case MoveId::H4: return "H4";
  }
  return "?";
}

std::optional<MoveId> move_from_name(const std::string& s) {
  static const std::map<std::string, MoveId> table = {
      {"O1", MoveId::O1},  {"O2", MoveId::O2},   {"O3", MoveId::O3},  {"O4", MoveId::O4},
      {"O4p", MoveId::O4p}, {"O4'", MoveId::O4p}, {"O5", MoveId::O5},  {"O6", MoveId::O6},
      {"O6p", MoveId::O6p}, {"O6'", MoveId::O6p}, {"O7", MoveId::O7},  {"O8", MoveId::O8},
      {"H1", MoveId::H1},  {"H2", MoveId::H2},   {"H3", MoveId::H3},  {"H4", MoveId::H4}};
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<MoveId> parse_move_list(const std::string& spec) {
  std::vector<MoveId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t dots = item.find("..");
    if (dots != std::string::npos) {
      auto a = move_from_name(item.substr(0, dots));
      auto b = move_from_name(item.substr(dots + 2));
      if (!a || !b) throw std::invalid_argument("bad move range: " + item);
      for (int m = static_cast<int>(*a); m <= static_cast<int>(*b); ++m) {
        MoveId id = static_cast<MoveId>(m);
        if (id == MoveId::O4p || id == MoveId::O6p) continue;  // primed ids listed explicitly
        out.push_back(id);
      }
    } else {
      auto m = move_from_name(item);
      if (!m) throw std::invalid_argument("unknown move: " + item);
      out.push_back(*m);
    }
  }
  return out;
}

std::vector<MoveId> generating_moves() {
  return {MoveId::O1, MoveId::O2, MoveId::O3, MoveId::O4, MoveId::O4p,
          MoveId::O5, MoveId::O6, MoveId::O6p, MoveId::O7, MoveId::O8};
}

std::vector<MoveId> nine_moves() {
  return {MoveId::O1, MoveId::O2, MoveId::O3, MoveId::O4, MoveId::O4p,
          MoveId::O5, MoveId::O6, MoveId::O6p, MoveId::O7};
}

// ---- pattern loading -----------------------------------------------------

namespace {

struct RawSideText {
  std::vector<std::string> lines;
};

PatternSide parse_side(const std::vector<std::string>& lines, int& max_leg) {
  PatternSide side;
  std::map<std::string, std::vector<SlotRef>> uses;  // token -> node slots
  std::map<std::string, int> leg_token;              // token -> leg id

  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "node") {
      std::string name, eq, kind_call;
      in >> name >> eq;
      std::string rest;
      std::getline(in, rest);
      size_t open = rest.find('(');
      size_t close = rest.find(')');
      std::string kind = rest.substr(0, open);
      kind.erase(std::remove_if(kind.begin(), kind.end(), ::isspace), kind.end());
      Node node;
      node.kind = kind == "X" ? NodeKind::Crossing : NodeKind::MarkedVertex;
      std::string args = rest.substr(open + 1, close - open - 1);
      std::stringstream as(args);
      std::string tok;
      int slot = 0;
      int id = static_cast<int>(side.nodes.size());
      while (std::getline(as, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        uses[tok].push_back({id, slot});
        node.edge[slot] = -1;
        ++slot;
      }
      if (slot != 4) throw std::invalid_argument("pattern node needs 4 slots: " + line);
      side.nodes.push_back(node);
    } else if (head == "leg") {
      int k;
      std::string eq, tok;
      in >> k >> eq >> tok;
      leg_token[tok] = k;
      max_leg = std::max(max_leg, k);
    } else if (head == "wire") {
      int i, j;
      in >> i >> j;
      side.wires.emplace_back(i, j);
      max_leg = std::max({max_leg, i, j});
    } else if (!head.empty()) {
      throw std::invalid_argument("bad pattern line: " + line);
    }
  }

  side.legs = max_leg + 1;
  side.leg_attach.assign(side.legs, SlotRef{-1, -1});
  for (const auto& [tok, slots] : uses) {
    auto lt = leg_token.find(tok);
    if (lt != leg_token.end()) {
      if (slots.size() != 1)
        throw std::invalid_argument("leg token must appear on one slot: " + tok);
      side.leg_attach[lt->second] = slots[0];
      side.nodes[slots[0].node].edge[slots[0].slot] = -(lt->second + 1);
    } else {
      if (slots.size() != 2)
        throw std::invalid_argument("pattern edge token must appear twice: " + tok);
      int e = static_cast<int>(side.edges.size());
      side.edges.push_back({slots[0], slots[1]});
      side.nodes[slots[0].node].edge[slots[0].slot] = e;
      side.nodes[slots[1].node].edge[slots[1].slot] = e;
    }
  }
  if (!side.nodes.empty() && !side.wires.empty())
    throw std::invalid_argument("pattern side mixes nodes and wires");
  return side;
}

// planar mirror: reverses the cyclic slot order and re-encodes
std::array<int, 4> mirror_perm(NodeKind k) {
  if (k == NodeKind::Crossing) return {0, 3, 2, 1};
  return {1, 0, 3, 2};
}

PatternSide mirror_side(const PatternSide& s) {
  PatternSide m = s;
  for (size_t n = 0; n < m.nodes.size(); ++n) {
    auto perm = mirror_perm(s.nodes[n].kind);
    for (int i = 0; i < 4; ++i) m.nodes[n].edge[i] = s.nodes[n].edge[perm[i]];
  }
  auto fix = [&](SlotRef& r) {
    if (r.node < 0) return;
    auto perm = mirror_perm(s.nodes[r.node].kind);
    for (int i = 0; i < 4; ++i)
      if (perm[i] == r.slot) {
        r.slot = i;
        return;
      }
  };
  for (auto& e : m.edges) {
    fix(e[0]);
    fix(e[1]);
  }
  for (auto& l : m.leg_attach) fix(l);
  return m;
}

std::string side_signature(const PatternSide& s) {
  // deterministic emission, minimized over traversal starts; legs keep ids
  if (s.nodes.empty()) {
    std::ostringstream o;
    for (auto [a, b] : s.wires) o << "w" << a << "-" << b << ";";
    return o.str();
  }
  std::string best;
  for (size_t n0 = 0; n0 < s.nodes.size(); ++n0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      std::map<int, std::pair<int, int>> label;  // node -> (index, shift)
      std::vector<int> order;
      std::map<int, int> edge_label;
      std::function<void(int, int)> visit = [&](int n, int entry) {
        label[n] = {static_cast<int>(order.size()), entry >= 2 ? 2 : 0};
        order.push_back(n);
      };
      visit(static_cast<int>(n0), s0);
      std::ostringstream text;
      for (size_t qi = 0; qi < order.size(); ++qi) {
        int n = order[qi];
        int shift = label[n].second;
        text << (s.nodes[n].kind == NodeKind::Crossing ? "X" : "M") << "(";
        for (int j = 0; j < 4; ++j) {
          int slot = (j + shift) % 4;
          int conn = s.nodes[n].edge[slot];
          if (conn < 0) {
            text << "L" << (-conn - 1);
          } else {
            auto it = edge_label.find(conn);
            if (it == edge_label.end()) {
              it = edge_label.emplace(conn, static_cast<int>(edge_label.size())).first;
              SlotRef here{n, slot};
              SlotRef far = (s.edges[conn][0] == here) ? s.edges[conn][1] : s.edges[conn][0];
              if (!label.count(far.node)) visit(far.node, far.slot);
            }
            text << "e" << it->second;
          }
          text << (j < 3 ? "," : "");
        }
        text << ")";
      }
      if (order.size() != s.nodes.size()) continue;  // disconnected side
      std::string cand = text.str();
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

std::map<MoveId, MoveDef> load_move_table() {
  std::map<MoveId, MoveDef> table;
  static const std::vector<std::pair<MoveId, std::string>> files = {
      {MoveId::O1, "patterns/o1.pat"},   {MoveId::O2, "patterns/o2.pat"},
      {MoveId::O3, "patterns/o3.pat"},   {MoveId::O4, "patterns/o4.pat"},
      {MoveId::O4p, "patterns/o4p.pat"}, {MoveId::O5, "patterns/o5.pat"},
      {MoveId::O6, "patterns/o6.pat"},   {MoveId::O6p, "patterns/o6p.pat"},
      {MoveId::O7, "patterns/o7.pat"},   {MoveId::O8, "patterns/o8.pat"},
      {MoveId::H1, "patterns/h1.pat"},   {MoveId::H2, "patterns/h2.pat"},
      {MoveId::H3, "patterns/h3.pat"},   {MoveId::H4, "patterns/h4.pat"}};
  for (const auto& [id, path] : files) {
    auto it = embedded_data().find(path);
    if (it == embedded_data().end())
      throw std::runtime_error("missing move pattern data: " + path);
    MoveDef def;
    def.id = id;

    std::istringstream in(it->second);
    std::string line;
    bool mirrors = false;
    std::string variant_name;
    std::vector<std::string> cur_side;
    std::vector<std::vector<std::string>> sides;
    auto flush_variant = [&]() {
      if (variant_name.empty()) return;
      if (!cur_side.empty()) {
        sides.push_back(cur_side);
        cur_side.clear();
      }
      if (sides.size() != 2)
        throw std::invalid_argument("variant needs lhs and rhs: " + variant_name);
      MoveVariant v;
      v.name = variant_name;
      int max_leg = -1;
      v.lhs = parse_side(sides[0], max_leg);
      int rhs_max = max_leg;
      v.rhs = parse_side(sides[1], rhs_max);
      // both sides share the leg universe
      int legs = std::max(v.lhs.legs, v.rhs.legs);
      v.lhs.legs = v.rhs.legs = legs;
      v.lhs.leg_attach.resize(legs, SlotRef{-1, -1});
      v.rhs.leg_attach.resize(legs, SlotRef{-1, -1});
      def.variants.push_back(v);
      variant_name.clear();
      sides.clear();
    };

    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      if (head.empty()) continue;
      if (head == "move") {
        std::string nm;
        ls >> nm;
      } else if (head == "generating") {
        std::string v;
        ls >> v;
        def.generating = (v == "yes");
      } else if (head == "mirrors") {
        std::string v;
        ls >> v;
        mirrors = (v == "yes");
      } else if (head == "close") {
        int a, b;
        ls >> a >> b;
        def.closure.emplace_back(a, b);
      } else if (head == "variant") {
        flush_variant();
        ls >> variant_name;
        if (variant_name.empty()) variant_name = "v";
      } else if (head == "lhs") {
        // starts first side
      } else if (head == "rhs") {
        sides.push_back(cur_side);
        cur_side.clear();
      } else {
        cur_side.push_back(line);
      }
    }
    flush_variant();

    if (mirrors) {
      std::set<std::string> seen;
      for (const auto& v : def.variants)
        seen.insert(side_signature(v.lhs) + "|" + side_signature(v.rhs));
      size_t base = def.variants.size();
      for (size_t i = 0; i < base; ++i) {
        MoveVariant mv;
        mv.name = def.variants[i].name + "-mirror";
        mv.lhs = mirror_side(def.variants[i].lhs);
        mv.rhs = mirror_side(def.variants[i].rhs);
        std::string sig = side_signature(mv.lhs) + "|" + side_signature(mv.rhs);
        if (seen.insert(sig).second) def.variants.push_back(mv);
      }
    }
    table.emplace(id, std::move(def));
  }
  return table;
}

const std::map<MoveId, MoveDef>& move_table() {
  static const std::map<MoveId, MoveDef> table = load_move_table();
  return table;
}

}  // namespace

const MoveDef& move_def(MoveId m) { return move_table().at(m); }

std::string MoveSite::describe() const {
  std::ostringstream o;
  o << move_name(move) << (dir == Dir::Forward ? "" : " (backward)") << " variant " << variant;
  if (!nodes.empty()) {
    o << " at nodes";
    for (int n : nodes) o << " " << n;
  }
  if (!wire_edge.empty()) {
    o << " on edges";
    for (int e : wire_edge) o << " " << (e < 0 ? std::string("loop") : std::to_string(e));
  }
  return o.str();
}

// ---- matching -------------------------------------------------------------

namespace {

void match_node_side(const Diagram& d, const PatternSide& side, MoveId m, Dir dir, int variant,
                     uint64_t hash, std::vector<MoveSite>& out) {
  int pn = static_cast<int>(side.nodes.size());
  for (int d0 = 0; d0 < static_cast<int>(d.nodes.size()); ++d0) {
    if (d.nodes[d0].kind != side.nodes[0].kind) continue;
    for (int shift0 = 0; shift0 < 4; shift0 += 2) {
      std::vector<int> map_node(pn, -1), map_shift(pn, 0);
      std::vector<bool> used(d.nodes.size(), false);
      map_node[0] = d0;
      map_shift[0] = shift0;
      used[d0] = true;
      std::vector<int> queue{0};
      bool ok = true;
      for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
        int p = queue[qi];
        int dn = map_node[p], sh = map_shift[p];
        for (int ps = 0; ps < 4 && ok; ++ps) {
          int conn = side.nodes[p].edge[ps];
          if (conn < 0) continue;  // leg
          int ds = (ps + sh) % 4;
          int de = d.nodes[dn].edge[ds];
          SlotRef here{dn, ds};
          SlotRef dfar = d.other_end(de, here);
          const auto& pe = side.edges[conn];
          SlotRef phere{p, ps};
          SlotRef pfar = (pe[0] == phere) ? pe[1] : pe[0];
          if (map_node[pfar.node] >= 0) {
            int need = (dfar.slot - pfar.slot + 4) % 4;
            if (map_node[pfar.node] != dfar.node || map_shift[pfar.node] != need) ok = false;
          } else {
            int need = (dfar.slot - pfar.slot + 4) % 4;
            if (need % 2 != 0 || used[dfar.node] ||
                d.nodes[dfar.node].kind != side.nodes[pfar.node].kind) {
              ok = false;
            } else {
              map_node[pfar.node] = dfar.node;
              map_shift[pfar.node] = need;
              used[dfar.node] = true;
              queue.push_back(pfar.node);
            }
          }
        }
      }
      if (!ok || std::find(map_node.begin(), map_node.end(), -1) != map_node.end()) continue;
      MoveSite site;
      site.move = m;
      site.dir = dir;
      site.variant = variant;
      site.nodes = map_node;
      site.shifts = map_shift;
      site.diagram_hash = hash;
      out.push_back(std::move(site));
    }
  }
}

void match_wire_side(const Diagram& d, const PatternSide& side, MoveId m, Dir dir, int variant,
                     uint64_t hash, std::vector<MoveSite>& out) {
  int nw = static_cast<int>(side.wires.size());
  std::vector<int> edges(nw, 0), flips(nw, 0);
  std::function<void(int, int)> rec = [&](int w, int loops_used) {
    if (w == nw) {
      MoveSite site;
      site.move = m;
      site.dir = dir;
      site.variant = variant;
      site.wire_edge.assign(edges.begin(), edges.begin() + nw);
      site.wire_flip.assign(flips.begin(), flips.begin() + nw);
      site.diagram_hash = hash;
      out.push_back(std::move(site));
      return;
    }
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
      for (int f = 0; f < 2; ++f) {
        edges[w] = e;
        flips[w] = f;
        rec(w + 1, loops_used);
      }
    }
    if (loops_used < d.free_loops) {
      edges[w] = -1;
      flips[w] = 0;
      rec(w + 1, loops_used + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<MoveSite> find_move_sites(const Diagram& d, MoveId m, Dir dir) {
  const MoveDef& def = move_def(m);
  uint64_t hash = canonical_hash(d);
  std::vector<MoveSite> out;
  for (int v = 0; v < static_cast<int>(def.variants.size()); ++v) {
    const PatternSide& side = dir == Dir::Forward ? def.variants[v].lhs : def.variants[v].rhs;
    if (side.wire_side())
      match_wire_side(d, side, m, dir, v, hash, out);
    else
      match_node_side(d, side, m, dir, v, hash, out);
  }
  return out;
}

// ---- rewriting ------------------------------------------------------------

namespace {

constexpr int kTerminal = -2;

struct ChainEnd {
  int partner = -1;       // endpoint id, or kTerminal
  SlotRef port;           // valid when partner == kTerminal
};

}  // namespace

ApplyResult apply_move_ex(const Diagram& d, const MoveSite& site) {
  if (site.diagram_hash != canonical_hash(d)) throw StaleSiteError();
  const MoveDef& def = move_def(site.move);
  const MoveVariant& var = def.variants.at(site.variant);
  const PatternSide& pat = site.dir == Dir::Forward ? var.lhs : var.rhs;
  const PatternSide& rep = site.dir == Dir::Forward ? var.rhs : var.lhs;
  int legs = std::max(pat.legs, rep.legs);

  Diagram out;
  out.free_loops = d.free_loops;

  std::vector<bool> matched(d.nodes.size(), false);
  for (int n : site.nodes) matched[n] = true;

  std::vector<int> new_id(d.nodes.size(), -1);
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    if (matched[n]) continue;
    new_id[n] = static_cast<int>(out.nodes.size());
    out.nodes.push_back({d.nodes[n].kind, {-1, -1, -1, -1}});
  }
  int rep_base = static_cast<int>(out.nodes.size());
  for (const auto& rn : rep.nodes) out.nodes.push_back({rn.kind, {-1, -1, -1, -1}});

  // copy untouched edges (cut edges of wire sites are rebuilt below)
  std::vector<bool> cut(d.edges.size(), false);
  if (pat.wire_side())
    for (int e : site.wire_edge)
      if (e >= 0) cut[e] = true;
  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    const Edge& e = d.edges[ei];
    if (cut[ei] || matched[e.a.node] || matched[e.b.node]) continue;
    int id = static_cast<int>(out.edges.size());
    SlotRef na{new_id[e.a.node], e.a.slot}, nb{new_id[e.b.node], e.b.slot};
    out.edges.push_back({na, nb});
    out.nodes[na.node].edge[na.slot] = id;
    out.nodes[nb.node].edge[nb.slot] = id;
  }
  // replacement internal edges
  for (const auto& pe : rep.edges) {
    int id = static_cast<int>(out.edges.size());
    SlotRef na{rep_base + pe[0].node, pe[0].slot}, nb{rep_base + pe[1].node, pe[1].slot};
    out.edges.push_back({na, nb});
    out.nodes[na.node].edge[na.slot] = id;
    out.nodes[nb.node].edge[nb.slot] = id;
  }

  // endpoint ids: leg k has an external side 2k and a replacement side 2k+1
  std::vector<ChainEnd> ends(2 * legs);
  auto tie_ends = [&](int a, int b) {
    ends[a].partner = b;
    ends[b].partner = a;
  };
  auto terminal = [&](int a, SlotRef port) {
    ends[a].partner = kTerminal;
    ends[a].port = port;
  };

  // external side
  if (pat.wire_side()) {
    std::map<int, std::vector<int>> by_edge;  // diagram edge -> wire indices in order
    for (int w = 0; w < static_cast<int>(pat.wires.size()); ++w) {
      int e = site.wire_edge.at(w);
      if (e < 0) {
        auto [i, j] = pat.wires[w];
        tie_ends(2 * i, 2 * j);
        --out.free_loops;
      } else {
        by_edge[e].push_back(w);
      }
    }
    for (const auto& [e, ws] : by_edge) {
      SlotRef a = d.edges[e].a, b = d.edges[e].b;
      // endpoints of cut edges are never on matched nodes here (no nodes matched)
      int prev = -1;
      SlotRef prev_port{new_id[a.node], a.slot};
      for (int w : ws) {
        auto [i, j] = pat.wires[w];
        int first = site.wire_flip.at(w) ? 2 * j : 2 * i;
        int second = site.wire_flip.at(w) ? 2 * i : 2 * j;
        if (prev < 0)
          terminal(first, prev_port);
        else
          tie_ends(prev, first);
        prev = second;
      }
      terminal(prev, SlotRef{new_id[b.node], b.slot});
    }
  } else {
    // per leg: the diagram edge hanging off the matched slot
    std::vector<SlotRef> attach(legs, SlotRef{-1, -1});
    for (int k = 0; k < legs; ++k) {
      SlotRef pa = pat.leg_attach[k];
      if (pa.node < 0) continue;
      attach[k] = SlotRef{site.nodes[pa.node], (pa.slot + site.shifts[pa.node]) % 4};
    }
    for (int k = 0; k < legs; ++k) {
      if (attach[k].node < 0) continue;
      int e = d.edge_at(attach[k]);
      SlotRef far = d.other_end(e, attach[k]);
      if (matched[far.node]) {
        // the leg edge loops back into the matched region at another leg
        int other = -1;
        for (int j = 0; j < legs; ++j)
          if (j != k && attach[j] == far) other = j;
        if (other < 0) throw std::logic_error("apply_move: leg edge enters a non-leg slot");
        if (other > k) tie_ends(2 * k, 2 * other);
      } else {
        terminal(2 * k, SlotRef{new_id[far.node], far.slot});
      }
    }
  }

  // replacement side
  std::vector<int> rep_wire_of_leg(legs, -1);
  if (rep.wire_side()) {
    for (int w = 0; w < static_cast<int>(rep.wires.size()); ++w) {
      auto [i, j] = rep.wires[w];
      tie_ends(2 * i + 1, 2 * j + 1);
      rep_wire_of_leg[i] = w;
      rep_wire_of_leg[j] = w;
    }
  } else {
    for (int k = 0; k < legs; ++k) {
      SlotRef ra = rep.leg_attach[k];
      if (ra.node < 0) continue;
      terminal(2 * k + 1, SlotRef{rep_base + ra.node, ra.slot});
    }
  }

  // stitch chains; crossing a leg goes from side 2k to 2k+1 and back
  std::vector<bool> consumed(2 * legs, false);
  std::vector<int> rev_wire_edge(rep.wires.size(), -2);
  std::vector<int> rev_wire_flip(rep.wires.size(), 0);

  auto add_edge = [&](SlotRef a, SlotRef b) {
    int id = static_cast<int>(out.edges.size());
    out.edges.push_back({a, b});
    out.nodes[a.node].edge[a.slot] = id;
    out.nodes[b.node].edge[b.slot] = id;
    return id;
  };

  for (int ep = 0; ep < 2 * legs; ++ep) {
    if (consumed[ep] || ends[ep].partner != kTerminal) continue;
    // walk from this terminal
    std::vector<std::pair<int, bool>> rep_wires_crossed;  // (wire, entered at .first leg)
    SlotRef start = ends[ep].port;
    int cur = ep;
    consumed[cur] = true;
    SlotRef finish;
    while (true) {
      int across = cur ^ 1;  // through the leg
      consumed[across] = true;
      if ((across & 1) && rep_wire_of_leg[across / 2] >= 0) {
        int w = rep_wire_of_leg[across / 2];
        bool entered_first = rep.wires[w].first == across / 2;
        if (rep_wires_crossed.empty() || rep_wires_crossed.back().first != w)
          rep_wires_crossed.emplace_back(w, entered_first);
      }
      if (ends[across].partner == kTerminal) {
        finish = ends[across].port;
        break;
      }
      cur = ends[across].partner;
      consumed[cur] = true;
    }
    int eid = add_edge(start, finish);
    for (auto [w, entered_first] : rep_wires_crossed) {
      rev_wire_edge[w] = eid;
      rev_wire_flip[w] = entered_first ? 0 : 1;
    }
  }
  // untouched chains are closed loops
  for (int ep = 0; ep < 2 * legs; ++ep) {
    if (consumed[ep]) continue;
    int cur = ep;
    while (!consumed[cur]) {
      consumed[cur] = true;
      int across = cur ^ 1;
      consumed[across] = true;
      if ((across & 1) && rep_wire_of_leg[across / 2] >= 0)
        rev_wire_edge[rep_wire_of_leg[across / 2]] = -1;
      cur = ends[across].partner;
      if (cur == kTerminal) throw std::logic_error("apply_move: broken chain");
    }
    ++out.free_loops;
  }

  out.check_valid();

  ApplyResult res;
  res.diagram = std::move(out);
  res.reverse_site.move = site.move;
  res.reverse_site.dir = site.dir == Dir::Forward ? Dir::Backward : Dir::Forward;
  res.reverse_site.variant = site.variant;
  if (rep.wire_side()) {
    res.reverse_site.wire_edge = rev_wire_edge;
    res.reverse_site.wire_flip = rev_wire_flip;
  } else {
    for (int i = 0; i < static_cast<int>(rep.nodes.size()); ++i) {
      res.reverse_site.nodes.push_back(rep_base + i);
      res.reverse_site.shifts.push_back(0);
    }
  }
  res.reverse_site.diagram_hash = canonical_hash(res.diagram);
  return res;
}

Diagram apply_move(const Diagram& d, const MoveSite& site) {
  return apply_move_ex(d, site).diagram;
}

Diagram random_walk(const Diagram& start, const std::vector<MoveId>& allowed, int steps,
                    uint64_t seed) {
  std::mt19937_64 rng(seed);
  Diagram cur = canonical(start);
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<MoveId, Dir>> applicable;
    std::map<int, std::vector<MoveSite>> sites_of;
    int idx = 0;
    for (MoveId m : allowed) {
      for (Dir dir : {Dir::Forward, Dir::Backward}) {
        auto sites = find_move_sites(cur, m, dir);
        if (!sites.empty()) {
          applicable.emplace_back(m, dir);
          sites_of[idx] = std::move(sites);
          ++idx;
        }
      }
    }
    if (applicable.empty()) continue;
    int pick = static_cast<int>(rng() % applicable.size());
    const auto& sites = sites_of[pick];
    const MoveSite& site = sites[rng() % sites.size()];
    cur = canonical(apply_move(cur, site));
  }
  return cur;
}

// ---- derivation search ------------------------------------------------

std::optional<std::vector<DerivationStep>> derive(const Diagram& from, const Diagram& to,
                                                  const std::vector<MoveId>& moves, int budget,
                                                  int* states_out) {
  std::string target = canonical_text(to);
  std::string start = canonical_text(from);
  if (states_out) *states_out = 0;
  if (start == target) return std::vector<DerivationStep>{};
  if (budget <= 0) return std::nullopt;

  struct State {
    int cost;
    std::string text;
    std::vector<DerivationStep> path;
    bool operator>(const State& o) const {
      return std::tie(cost, text) > std::tie(o.cost, o.text);
    }
  };
  auto weight = [](const Diagram& d) {
    return static_cast<int>(d.nodes.size());
  };

  std::priority_queue<State, std::vector<State>, std::greater<State>> open;
  std::set<std::string> seen{start};
  open.push({weight(from), start, {}});
  int states = 1;

  while (!open.empty() && states < budget) {
    State st = open.top();
    open.pop();
    Diagram d = parse_mgd(st.text);
    for (MoveId m : moves) {
      for (Dir dir : {Dir::Forward, Dir::Backward}) {
        auto sites = find_move_sites(d, m, dir);
        for (int si = 0; si < static_cast<int>(sites.size()); ++si) {
          Diagram nd = apply_move(d, sites[si]);
          std::string nt = canonical_text(nd);
          if (!seen.insert(nt).second) continue;
          ++states;
          if (states_out) *states_out = states;
          std::vector<DerivationStep> path = st.path;
          path.push_back({m, dir, sites[si].variant, si});
          if (nt == target) return path;
          if (states >= budget) return std::nullopt;
          open.push({weight(nd), nt, std::move(path)});
        }
      }
    }
  }
  return std::nullopt;
}

Diagram closed_side(MoveId relation, Dir side) {
  const MoveDef& def = move_def(relation);
  if (def.closure.empty()) throw std::logic_error("no closure data for " + move_name(relation));
  const MoveVariant& var = def.variants.at(0);
  const PatternSide& s = side == Dir::Forward ? var.lhs : var.rhs;
  // realize the side as a diagram, joining legs per the closure wiring
  Diagram d;
  for (const auto& n : s.nodes) d.nodes.push_back({n.kind, {-1, -1, -1, -1}});
  for (const auto& pe : s.edges) {
    int id = static_cast<int>(d.edges.size());
    d.edges.push_back({pe[0], pe[1]});
    d.nodes[pe[0].node].edge[pe[0].slot] = id;
    d.nodes[pe[1].node].edge[pe[1].slot] = id;
  }
  for (auto [i, j] : def.closure) {
    SlotRef a = s.leg_attach.at(i), b = s.leg_attach.at(j);
    if (a.node < 0 || b.node < 0) throw std::logic_error("closure leg not attached");
    int id = static_cast<int>(d.edges.size());
    d.edges.push_back({a, b});
    d.nodes[a.node].edge[a.slot] = id;
    d.nodes[b.node].edge[b.slot] = id;
  }
  d.check_valid();
  return canonical(d);
}

std::vector<HRelationReport> verify_h_relations(int budget) {
  std::vector<HRelationReport> out;
  for (MoveId h : {MoveId::H1, MoveId::H2, MoveId::H3, MoveId::H4}) {
    HRelationReport rep;
    rep.relation = h;
    Diagram lhs = closed_side(h, Dir::Forward);
    Diagram rhs = closed_side(h, Dir::Backward);
    int states = 0;
    auto path = derive(lhs, rhs, nine_moves(), budget, &states);
    rep.states_explored = states;
    if (path) {
      rep.found = Tri::Yes;
      rep.sequence = *path;
    } else {
      rep.found = Tri::Unknown;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace chkit
