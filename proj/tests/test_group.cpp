#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chkit/group.hpp"
#include "chkit/library.hpp"
#include "chkit/orient.hpp"

using namespace chkit;

namespace {

// Independent classical Alexander-matrix oracle: textbook crossing rows
// (1-t, t, -1) / (1-t^-1, t^-1, -1), arcs traced directly here.
struct OracleArcs {
  std::vector<int> arc;  // per edge
  int count = 0;
};

OracleArcs oracle_arcs(const Diagram& d) {
  OracleArcs oa;
  oa.arc.assign(d.edges.size(), -1);
  std::vector<int> parent(d.edges.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& n : d.nodes)
    if (n.kind == NodeKind::Crossing) parent[find(n.edge[1])] = find(n.edge[3]);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    int r = find(static_cast<int>(e));
    if (oa.arc[r] < 0) oa.arc[r] = oa.count++;
    oa.arc[e] = oa.arc[r];
  }
  return oa;
}

IdealFingerprint oracle_alexander(const Diagram& d) {
  OracleArcs oa = oracle_arcs(d);
  Orientation o = orientation_from_bits(d, std::vector<int>(lminus_component_count(d), 0));
  LaurentMatrix m = make_matrix(d.crossings(), oa.count, 1);
  LaurentPoly t = LaurentPoly::variable(1, 0);
  LaurentPoly tinv = LaurentPoly::monomial(1, {-1}, 1);
  LaurentPoly one = LaurentPoly::constant(1, 1);
  int row = 0;
  for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n) {
    const Node& node = d.nodes[n];
    if (node.kind != NodeKind::Crossing) continue;
    int under_in = flows_into(d, o, {n, 0}) ? 0 : 2;
    int under_out = (under_in + 2) % 4;
    int over_in = flows_into(d, o, {n, 1}) ? 1 : 3;
    int over_out = (over_in + 2) % 4;
    bool positive = over_out == (under_out + 1) % 4;
    int a = oa.arc[node.edge[under_in]];
    int b = oa.arc[node.edge[under_out]];
    int c = oa.arc[node.edge[over_in]];
    LaurentPoly tt = positive ? t : tinv;
    m.at(row, c) = m.at(row, c) + (one - tt);
    m.at(row, a) = m.at(row, a) + tt;
    m.at(row, b) = m.at(row, b) - one;
    ++row;
  }
  if (oa.count - 1 <= 0) return ideal_fingerprint({one});
  return ideal_fingerprint(minors(m, oa.count - 1), 1);
}

}  // namespace

TEST_CASE("presentation shape: arcs + loops generators, crossings + 3v relators") {
  for (const auto& e : diagram_library()) {
    Diagram d = library_diagram(e.name);
    Presentation p = wirtinger_presentation(d);
    CHECK(p.relators.size() ==
          static_cast<size_t>(d.crossings() + 3 * d.marked_vertices()));
    CHECK(p.components == surface_components(d).count);
  }
  Presentation u = wirtinger_presentation(library_diagram("unknot"));
  CHECK(u.generators == 1);
  CHECK(u.relators.empty());
}

TEST_CASE("fox derivative product rule") {
  std::mt19937_64 rng(12);
  VarMap vm;
  vm.arity = 2;
  vm.var_of_gen = {0, 0, 1, 1};
  vm.exp_of_gen = {1, 1, 1, 1};
  auto random_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i)
      w.emplace_back(static_cast<int>(rng() % 4), (rng() % 2) ? 1 : -1);
    return w;
  };
  auto abelian = [&](const Word& w) {
    Exponents e(2, 0);
    for (auto [g, s] : w) e[vm.var_of_gen[g]] += s * vm.exp_of_gen[g];
    return e;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = random_word(1 + rng() % 4);
    Word v = random_word(1 + rng() % 4);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    for (int g = 0; g < 4; ++g) {
      LaurentPoly lhs = fox_derivative(uv, g, vm);
      LaurentPoly rhs = fox_derivative(u, g, vm) +
                        LaurentPoly::monomial(2, abelian(u), 1) * fox_derivative(v, g, vm);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("commutator jacobian row") {
  Presentation p;
  p.generators = 2;
  p.component = {0, 1};
  p.components = 2;
  p.relators = {{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
  LaurentMatrix j = fox_jacobian(p, component_varmap(p));
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  CHECK(j.at(0, 0) == one - y);
  CHECK(j.at(0, 1) == x - one);
}

TEST_CASE("relator g g^-1 gives a zero row") {
  Presentation p;
  p.generators = 1;
  p.component = {0};
  p.components = 1;
  p.relators = {{{0, 1}, {0, -1}}};
  LaurentMatrix j = fox_jacobian(p, component_varmap(p));
  CHECK(j.at(0, 0).is_zero());
}

TEST_CASE("tietze merges") {
  Presentation p;
  p.generators = 2;
  p.component = {0, 0};
  p.components = 1;
  p.relators = {{{0, 1}, {1, -1}}};
  Presentation s = tietze_simplify(p);
  CHECK(s.generators == 1);
  CHECK(s.relators.empty());

  // a vertex relation chain a=b=c=d collapses to one generator
  Presentation q;
  q.generators = 4;
  q.component = {0, 0, 0, 0};
  q.components = 1;
  q.relators = {{{0, 1}, {1, -1}}, {{1, 1}, {2, -1}}, {{2, 1}, {3, -1}}};
  Presentation sq = tietze_simplify(q);
  CHECK(sq.generators == 1);
}

TEST_CASE("baseline groups") {
  // unknotted sphere: group Z, E1 = <1>
  Presentation u = tietze_simplify(wirtinger_presentation(library_diagram("unknot")));
  CHECK(abelianization_fingerprint(u) == std::vector<mpz_class>{0});
  CHECK(elementary_ideal(u, component_varmap(u), 1).is_unit());

  for (const char* name : {"sphere_pinched", "sphere_tube", "torus"}) {
    Presentation p = tietze_simplify(wirtinger_presentation(library_diagram(name)));
    CHECK_MESSAGE(abelianization_fingerprint(p) == std::vector<mpz_class>{0}, name);
    CHECK_MESSAGE(elementary_ideal(p, component_varmap(p), 1).is_unit(), name);
  }

  // projective planes: 2-torsion
  for (const char* name : {"p2_plus", "p2_minus"}) {
    Presentation p = tietze_simplify(wirtinger_presentation(library_diagram(name)));
    CHECK_MESSAGE(abelianization_fingerprint(p) == std::vector<mpz_class>{2}, name);
  }

  // Klein bottle: Z + Z/2 abelianization
  Presentation kb = tietze_simplify(wirtinger_presentation(library_diagram("klein_bottle")));
  CHECK(abelianization_fingerprint(kb) == std::vector<mpz_class>({2, 0}));

  // two-component d1: two variables in play
  Presentation d1 = tietze_simplify(wirtinger_presentation(library_diagram("d1")));
  CHECK(d1.components == 2);
}

TEST_CASE("trefoil Alexander ideal") {
  Presentation p = tietze_simplify(wirtinger_presentation(library_diagram("trefoil")));
  IdealFingerprint fp = elementary_ideal(p, component_varmap(p), 1);
  LaurentPoly t = LaurentPoly::variable(1, 0);
  LaurentPoly one = LaurentPoly::constant(1, 1);
  IdealFingerprint expect = ideal_fingerprint({t * t - t + one});
  CHECK(fingerprint_equal(fp, expect).verdict == Tri::Yes);
}

TEST_CASE("classical oracle equivalence") {
  for (const auto& name : classical_corpus()) {
    Diagram d = library_diagram(name);
    Presentation p = tietze_simplify(wirtinger_presentation(d));
    VarMap vm = component_varmap(p);
    // single-variable specialization
    std::fill(vm.var_of_gen.begin(), vm.var_of_gen.end(), 0);
    vm.arity = 1;
    IdealFingerprint mine = elementary_ideal(p, vm, 1);
    IdealFingerprint oracle = oracle_alexander(d);
    CHECK_MESSAGE(fingerprint_equal(mine, oracle).verdict == Tri::Yes, name, ": ", mine.text(),
                  " vs ", oracle.text());
  }
}

TEST_CASE("marker switch: double switch is the identity") {
  for (const auto& name : ch_corpus()) {
    Diagram d = library_diagram(name);
    std::vector<int> vs;
    for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n)
      if (d.nodes[n].kind == NodeKind::MarkedVertex) vs.push_back(n);
    if (vs.empty()) continue;
    Diagram once = marker_switch(d, vs);
    Diagram twice = marker_switch(once, vs);
    CHECK(canonical_text(twice) == canonical_text(d));
    bool switched_differs = canonical_text(once) != canonical_text(d);
    CHECK(switched_differs);
  }
}

TEST_CASE("marker switch leaves the presentation literally unchanged") {
  std::mt19937_64 rng(314);
  for (const auto& name : ch_corpus()) {
    Diagram d = library_diagram(name);
    std::vector<int> vs;
    for (int n = 0; n < static_cast<int>(d.nodes.size()); ++n)
      if (d.nodes[n].kind == NodeKind::MarkedVertex) vs.push_back(n);
    if (vs.empty()) continue;
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> subset;
      for (int v : vs)
        if (rng() % 2) subset.push_back(v);
      Diagram sw = marker_switch(d, subset);
      CHECK(wirtinger_presentation(sw).text() == wirtinger_presentation(d).text());
    }
  }
}

TEST_CASE("switching all markers preserves fingerprints when admissible") {
  Diagram torus = library_diagram("torus");
  Diagram sw = marker_switch(torus, {0, 1});
  Presentation a = tietze_simplify(wirtinger_presentation(torus));
  Presentation b = tietze_simplify(wirtinger_presentation(sw));
  CHECK(abelianization_fingerprint(a) == abelianization_fingerprint(b));
  CHECK(fingerprint_equal(elementary_ideal(a, component_varmap(a), 1),
                          elementary_ideal(b, component_varmap(b), 1))
            .verdict == Tri::Yes);
}

TEST_CASE("fingerprints are invariant under arc orientation flips") {
  std::mt19937_64 rng(2718);
  for (const char* name : {"trefoil", "p2_minus", "torus", "hopf"}) {
    Diagram d = library_diagram(name);
    Presentation base = wirtinger_presentation(d);
    IdealFingerprint fa =
        elementary_ideal(tietze_simplify(base), component_varmap(tietze_simplify(base)), 1);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<bool> flips(base.generators);
      for (size_t i = 0; i < flips.size(); ++i) flips[i] = rng() % 2;
      Presentation f = wirtinger_presentation(d, &flips);
      Presentation fs = tietze_simplify(f);
      IdealFingerprint fb = elementary_ideal(fs, component_varmap(fs), 1);
      CHECK_MESSAGE(fingerprint_equal(fa, fb).verdict == Tri::Yes, name);
    }
  }
}

TEST_CASE("size cap raises an explicit error") {
  Presentation p;
  p.generators = 13;
  p.component.assign(13, 0);
  p.components = 1;
  CHECK_THROWS_AS(elementary_ideal(p, component_varmap(p), 1), SizeError);
}

TEST_CASE("elementary ideal conventions at the unknot baseline") {
  Presentation u = tietze_simplify(wirtinger_presentation(library_diagram("unknot")));
  CHECK(elementary_ideal(u, component_varmap(u), 1).is_unit());
  // shifted convention also collapses to <1> here; the conventions are
  // separated by the published two-variable value, see the acceptance suite
  CHECK(elementary_ideal(u, component_varmap(u), 1, true).is_unit());
}
