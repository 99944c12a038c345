#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "chkit/diagram.hpp"
#include "chkit/library.hpp"

using namespace chkit;

TEST_CASE("parse: unknot and empty cases") {
  Diagram d = parse_mgd("loops 1\n");
  CHECK(d.nodes.empty());
  CHECK(d.free_loops == 1);
  CHECK(serialize_mgd(d) == "loops 1\n");

  Diagram e = parse_mgd("# nothing\n");
  CHECK(e.free_loops == 0);
  CHECK(serialize_mgd(e) == "loops 0\n");
}

TEST_CASE("parse: p2 source round-trips") {
  std::string src = library_source("p2_plus");
  Diagram d = parse_mgd(src);
  CHECK(d.nodes.size() == 2);
  CHECK(d.crossings() == 1);
  CHECK(d.marked_vertices() == 1);
  CHECK(d.edges.size() == 4);
  Diagram again = parse_mgd(serialize_mgd(d));
  CHECK(serialize_mgd(again) == serialize_mgd(d));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_mgd("node a = X(x, y, z)\n"), ParseError);      // 3 slots
  CHECK_THROWS_AS(parse_mgd("node a = X(x, y, z, w, v)\n"), ParseError);
  CHECK_THROWS_AS(parse_mgd("node a = X(x, x, x, y)\n"), ParseError);   // label thrice
  CHECK_THROWS_AS(parse_mgd("nodule a = X(a, b, c, d)\n"), ParseError);
  CHECK_THROWS_AS(parse_mgd("loops -1\n"), ParseError);
  try {
    parse_mgd("loops 1\nnode a = Y(p, q, r, s)\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("canonical form is relabeling invariant and idempotent") {
  std::string a = "node V = M(c1, b1, c2, b2)\nnode C = X(c1, b1, c2, b2)\n";
  std::string b = "node z9 = X(t, u, v, w)\nnode q = M(t, u, v, w)\n";
  CHECK(canonical_text(parse_mgd(a)) == canonical_text(parse_mgd(b)));

  for (const auto& entry : diagram_library()) {
    Diagram d = library_diagram(entry.name);
    CHECK(canonical_text(canonical(d)) == canonical_text(d));
  }
}

TEST_CASE("parse-serialize round trip on random diagrams") {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Diagram d = random_diagram(seed);
    std::string t = canonical_text(d);
    CHECK(canonical_text(parse_mgd(t)) == t);
  }
}

TEST_CASE("canonical form survives node renumbering") {
  std::mt19937_64 rng(3);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Diagram d = random_diagram(seed);
    // relabel: rebuild with nodes in a random order
    std::vector<int> perm(d.nodes.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    Diagram r;
    r.free_loops = d.free_loops;
    r.nodes.resize(d.nodes.size());
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    for (size_t i = 0; i < d.nodes.size(); ++i) r.nodes[inv[i]] = d.nodes[i];
    for (const auto& e : d.edges)
      r.edges.push_back({SlotRef{inv[e.a.node], e.a.slot}, SlotRef{inv[e.b.node], e.b.slot}});
    for (size_t e = 0; e < r.edges.size(); ++e) {
      r.nodes[r.edges[e].a.node].edge[r.edges[e].a.slot] = static_cast<int>(e);
      r.nodes[r.edges[e].b.node].edge[r.edges[e].b.slot] = static_cast<int>(e);
    }
    CHECK(canonical_text(r) == canonical_text(d));
  }
}

TEST_CASE("resolve: no vertices is the identity") {
  Diagram d = library_diagram("trefoil");
  CHECK(canonical_text(resolve(d, Sign::Plus)) == canonical_text(d));
  CHECK(canonical_text(resolve(d, Sign::Minus)) == canonical_text(d));
  Diagram u = library_diagram("unknot");
  CHECK(canonical_text(resolve(u, Sign::Plus)) == canonical_text(u));
}

TEST_CASE("resolve: single vertex with both self-pairings") {
  // slots joined 0-3 and 1-2 by edges; positive smoothing closes both
  Diagram d = parse_mgd("node V = M(a, b, b, a)\n");
  Diagram p = resolve(d, Sign::Plus);
  CHECK(p.nodes.empty());
  CHECK(p.free_loops == 2);
  Diagram m = resolve(d, Sign::Minus);
  CHECK(m.nodes.empty());
  CHECK(m.free_loops == 1);
}

TEST_CASE("resolutions share the crossing set") {
  for (const auto& name : ch_corpus()) {
    Diagram d = library_diagram(name);
    Diagram p = resolve(d, Sign::Plus);
    Diagram m = resolve(d, Sign::Minus);
    CHECK(p.crossings() == d.crossings());
    CHECK(m.crossings() == d.crossings());
    CHECK(p.marked_vertices() == 0);
    CHECK(m.marked_vertices() == 0);
  }
}

TEST_CASE("link components") {
  CHECK(link_components(library_diagram("unknot")).count == 1);
  CHECK(link_components(library_diagram("hopf")).count == 2);
  CHECK(link_components(library_diagram("trefoil")).count == 1);
  CHECK(link_components(resolve(library_diagram("torus"), Sign::Minus)).count == 1);
  CHECK(link_components(resolve(library_diagram("torus"), Sign::Plus)).count == 1);
}

TEST_CASE("surface components") {
  CHECK(surface_components(library_diagram("unknot")).count == 1);
  CHECK(surface_components(library_diagram("p2_plus")).count == 1);
  CHECK(surface_components(library_diagram("d1")).count == 2);
  CHECK(surface_components(library_diagram("d2")).count == 2);
}

TEST_CASE("euler characteristics of the built-ins") {
  for (const auto& e : diagram_library()) {
    if (!e.marked) continue;
    CHECK_MESSAGE(euler_characteristic(library_diagram(e.name)) == e.euler, e.name);
  }
  // sphere chi=2 and torus chi=0 satisfy chi = 2 comps - 2 genus
  CHECK(euler_characteristic(library_diagram("unknot")) == 2);
  CHECK(euler_characteristic(library_diagram("torus")) == 0);
  CHECK(euler_characteristic(library_diagram("p2_minus")) == 1);
}

TEST_CASE("component labels are canonical-relabel invariant") {
  for (const auto& name : ch_corpus()) {
    Diagram d = library_diagram(name);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      int a = link_components(resolve(d, s)).count;
      int b = link_components(resolve(canonical(d), s)).count;
      CHECK(a == b);
    }
  }
}
