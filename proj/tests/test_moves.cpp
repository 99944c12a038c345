#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "chkit/group.hpp"
#include "chkit/library.hpp"
#include "chkit/moves.hpp"
#include "chkit/simplify.hpp"

using namespace chkit;

namespace {

std::vector<MoveId> all_moves() {
  return {MoveId::O1, MoveId::O2, MoveId::O3, MoveId::O4, MoveId::O4p, MoveId::O5, MoveId::O6,
          MoveId::O6p, MoveId::O7, MoveId::O8, MoveId::H1, MoveId::H2, MoveId::H3, MoveId::H4};
}

struct GroupKey {
  std::vector<mpz_class> ab;
  IdealFingerprint e1;
  bool has_e1 = false;
};

GroupKey group_key(const Diagram& d) {
  GroupKey k;
  Presentation p = tietze_simplify(wirtinger_presentation(d));
  k.ab = abelianization_fingerprint(p);
  if (p.generators <= 12) {
    k.e1 = elementary_ideal(p, component_varmap(p), 1);
    k.has_e1 = true;
  }
  return k;
}

Diagram corpus_pick(std::mt19937_64& rng) {
  auto names = ch_corpus();
  return library_diagram(names[rng() % names.size()]);
}

}  // namespace

TEST_CASE("move table loads with variants") {
  for (MoveId m : all_moves()) {
    const MoveDef& def = move_def(m);
    CHECK(!def.variants.empty());
    bool is_h = m == MoveId::H1 || m == MoveId::H2 || m == MoveId::H3 || m == MoveId::H4;
    CHECK(def.generating == !is_h);
  }
  CHECK(move_def(MoveId::O3).variants.size() == 2);  // slide + mirror
  CHECK(move_def(MoveId::O5).variants.size() >= 4);
}

TEST_CASE("no kink-removal sites on the crossingless unknot") {
  Diagram u = library_diagram("unknot");
  CHECK(find_move_sites(u, MoveId::O1, Dir::Backward).empty());
  // but insertion sites exist: one per chirality on the free loop
  CHECK(find_move_sites(u, MoveId::O1, Dir::Forward).size() == 2);
}

TEST_CASE("p2 diagrams carry O5 sites at the vertex-crossing pair") {
  Diagram p2 = library_diagram("p2_minus");
  auto sites = find_move_sites(p2, MoveId::O5, Dir::Forward);
  auto sitesb = find_move_sites(p2, MoveId::O5, Dir::Backward);
  CHECK(!(sites.empty() && sitesb.empty()));
}

TEST_CASE("d2 carries an O8 site") {
  Diagram d2 = library_diagram("d2");
  auto s1 = find_move_sites(d2, MoveId::O8, Dir::Forward);
  auto s2 = find_move_sites(d2, MoveId::O8, Dir::Backward);
  CHECK(s1.size() + s2.size() >= 1);
}

TEST_CASE("O8 relates d1 and d2") {
  Diagram d1 = library_diagram("d1");
  Diagram d2 = library_diagram("d2");
  std::string target = canonical_text(d2);
  bool found = false;
  for (Dir dir : {Dir::Forward, Dir::Backward}) {
    for (const auto& s : find_move_sites(d1, MoveId::O8, dir)) {
      if (canonical_text(apply_move(d1, s)) == target) found = true;
    }
  }
  CHECK(found);
  CHECK(d1.crossings() == d2.crossings());
  CHECK(canonical_text(d1) != target);
}

TEST_CASE("forward then backward returns the canonical original") {
  std::mt19937_64 rng(2024);
  int trials = 0;
  while (trials < 500) {
    Diagram d = corpus_pick(rng);
    MoveId m = all_moves()[rng() % all_moves().size()];
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    const MoveSite& site = sites[rng() % sites.size()];
    ApplyResult r = apply_move_ex(d, site);
    Diagram back = apply_move(r.diagram, r.reverse_site);
    CHECK_MESSAGE(canonical_text(back) == canonical_text(d), move_name(m));
    ++trials;
  }
}

TEST_CASE("per-move delta table") {
  // chi is preserved by every move; O6/O6p add a vertex and one circle to
  // exactly one resolution
  std::map<MoveId, std::array<int, 3>> expect;  // d(c+), d(c-), d(v)
  for (MoveId m : all_moves()) expect[m] = {0, 0, 0};
  expect[MoveId::O6] = {1, 0, 1};
  expect[MoveId::O6p] = {0, 1, 1};

  std::mt19937_64 rng(77);
  std::map<MoveId, int> seen;
  int guard = 0;
  while (guard++ < 30000) {
    bool done = true;
    for (MoveId m : all_moves()) done = done && seen[m] >= 40;
    if (done) break;
    Diagram d = corpus_pick(rng);
    MoveId m = all_moves()[rng() % all_moves().size()];
    if (seen[m] >= 40) continue;
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    Diagram nd = apply_move(d, sites[rng() % sites.size()]);
    int dcp = link_components(resolve(nd, Sign::Plus)).count -
              link_components(resolve(d, Sign::Plus)).count;
    int dcm = link_components(resolve(nd, Sign::Minus)).count -
              link_components(resolve(d, Sign::Minus)).count;
    int dv = nd.marked_vertices() - d.marked_vertices();
    CHECK_MESSAGE(dcp == expect[m][0], move_name(m));
    CHECK_MESSAGE(dcm == expect[m][1], move_name(m));
    CHECK_MESSAGE(dv == expect[m][2], move_name(m));
    CHECK_MESSAGE(euler_characteristic(nd) == euler_characteristic(d), move_name(m));
    ++seen[m];
  }
  for (MoveId m : all_moves()) CHECK_MESSAGE(seen[m] >= 40, move_name(m));
}

TEST_CASE("every variant preserves the diagram group") {
  // The strongest transcription check: the presented group of S(D) is
  // unchanged by each generating move; O8 is checked separately on its
  // honest band-pass pair.
  std::mt19937_64 rng(99);
  std::map<std::pair<MoveId, int>, int> seen;
  std::vector<MoveId> checked = nine_moves();
  for (MoveId h : {MoveId::H1, MoveId::H2, MoveId::H3, MoveId::H4}) checked.push_back(h);

  int guard = 0;
  while (guard++ < 40000) {
    bool done = true;
    for (MoveId m : checked)
      for (int v = 0; v < static_cast<int>(move_def(m).variants.size()); ++v)
        done = done && seen[{m, v}] >= 6;
    if (done) break;
    Diagram d = corpus_pick(rng);
    MoveId m = checked[rng() % checked.size()];
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    const MoveSite& site = sites[rng() % sites.size()];
    if (seen[{m, site.variant}] >= 6) continue;
    Diagram nd = apply_move(d, site);
    GroupKey a = group_key(d);
    GroupKey b = group_key(nd);
    {
      INFO(move_name(m), " variant ", site.variant);
      CHECK(a.ab == b.ab);
      if (a.has_e1 && b.has_e1)
        CHECK(fingerprint_equal(a.e1, b.e1).verdict != Tri::No);
    }
    ++seen[{m, site.variant}];
  }
  for (MoveId m : checked)
    for (int v = 0; v < static_cast<int>(move_def(m).variants.size()); ++v) {
      INFO(move_name(m), " variant ", v, " never applied");
      CHECK(seen[{m, v}] >= 6);
    }
}

TEST_CASE("O8 preserves the group on the band-pass pair") {
  GroupKey a = group_key(library_diagram("d1"));
  GroupKey b = group_key(library_diagram("d2"));
  CHECK(a.ab == b.ab);
  if (a.has_e1 && b.has_e1)
    CHECK(fingerprint_equal(a.e1, b.e1).verdict != Tri::No);
}

TEST_CASE("classical moves preserve resolution component counts") {
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 120; ++t) {
    Diagram d = corpus_pick(rng);
    MoveId m = std::vector<MoveId>{MoveId::O1, MoveId::O2, MoveId::O3}[rng() % 3];
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    Diagram nd = apply_move(d, sites[rng() % sites.size()]);
    for (Sign s : {Sign::Plus, Sign::Minus})
      CHECK(link_components(resolve(nd, s)).count == link_components(resolve(d, s)).count);
  }
}

TEST_CASE("stale sites are rejected") {
  Diagram d = library_diagram("torus");
  auto sites = find_move_sites(d, MoveId::O6, Dir::Forward);
  REQUIRE(!sites.empty());
  Diagram changed = apply_move(d, sites[0]);
  CHECK_THROWS_AS(apply_move(changed, sites[0]), StaleSiteError);
}

TEST_CASE("random walks are seeded and reproducible") {
  Diagram d = library_diagram("torus");
  CHECK(canonical_text(random_walk(d, nine_moves(), 0, 1)) == canonical_text(canonical(d)));
  Diagram w1 = random_walk(d, {MoveId::O1, MoveId::O2, MoveId::O6}, 6, 42);
  Diagram w2 = random_walk(d, {MoveId::O1, MoveId::O2, MoveId::O6}, 6, 42);
  CHECK(canonical_text(w1) == canonical_text(w2));
  // classical moves leave both resolutions' component counts unchanged
  Diagram w3 = random_walk(d, {MoveId::O1, MoveId::O2, MoveId::O3}, 8, 7);
  for (Sign s : {Sign::Plus, Sign::Minus})
    CHECK(link_components(resolve(w3, s)).count == link_components(resolve(d, s)).count);
}

TEST_CASE("admissibility is preserved across random applications") {
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 25) {
    Diagram d = corpus_pick(rng);
    MoveId m = generating_moves()[rng() % 10];
    if (m == MoveId::O8) continue;  // only honest band-pass sites stay admissible
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    Diagram nd = apply_move(d, sites[rng() % sites.size()]);
    CHECK_MESSAGE(is_admissible(nd, 30000) != Tri::No, move_name(m));
    ++done;
  }
}

TEST_CASE("verify_h derives the relations") {
  auto reports = verify_h_relations(100000);
  REQUIRE(reports.size() == 4);
  std::map<MoveId, HRelationReport> by;
  for (auto& r : reports) by[r.relation] = r;
  CHECK(by[MoveId::H1].found == Tri::Yes);
  CHECK(by[MoveId::H1].sequence.empty());  // both sides share one code
  CHECK(by[MoveId::H2].found == Tri::Yes);
  CHECK(by[MoveId::H3].found == Tri::Yes);

  auto zero = verify_h_relations(0);
  for (auto& r : zero)
    if (r.relation != MoveId::H1) CHECK(r.found == Tri::Unknown);
}
