#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chkit/library.hpp"
#include "chkit/minvariant.hpp"
#include "chkit/moves.hpp"

using namespace chkit;

TEST_CASE("minvariant of the unknot is a singleton unit ideal") {
  MInvariant m = minvariant(library_diagram("unknot"));
  CHECK(m.per_orientation.size() == 2);
  CHECK(m.set.size() == 1);
  CHECK(m.set[0].is_unit());
  CHECK(m.admissibility == Tri::Yes);
}

TEST_CASE("minvariant is invariant under canonical relabeling") {
  Diagram t = library_diagram("torus");
  MInvariant a = minvariant(t);
  MInvariant b = minvariant(canonical(t));
  CHECK(minvariant_equal(a, b).verdict == Tri::Yes);
}

TEST_CASE("published values for the band-pass pair") {
  MInvariant m1 = minvariant(library_diagram("d1"));
  CHECK(m1.set.size() == 1);
  CHECK(m1.set[0].is_zero());

  MInvariant m2 = minvariant(library_diagram("d2"));
  LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
  LaurentPoly one = LaurentPoly::constant(2, 1);
  IdealFingerprint golden = ideal_fingerprint({(x + one) * (x - one), (x + one) * (y - one)});
  CHECK(m2.set.size() == 1);
  CHECK(fingerprint_equal(m2.set[0], golden).verdict == Tri::Yes);
  CHECK(m2.set[0].text() == golden.text());

  CompareResult diff = minvariant_equal(m1, m2);
  CHECK(diff.verdict == Tri::No);
  CHECK(!diff.witness.empty());
}

TEST_CASE("raw and simplified presentations give the same ideals") {
  for (const char* name : {"d1", "d2"}) {
    Diagram d = library_diagram(name);
    auto os = enumerate_orientations(d);
    for (size_t i = 0; i < os.size(); i += 3) {  // sample a few orientations
      Diagram w = mirror_cut(d, os[i]);
      Presentation raw = wirtinger_presentation(w);
      Presentation simp = tietze_simplify(raw);
      if (raw.generators > 12) continue;  // raw route only when small enough
      IdealFingerprint a = elementary_ideal(raw, component_varmap(raw), 1);
      IdealFingerprint b = elementary_ideal(simp, component_varmap(simp), 1);
      CHECK_MESSAGE(fingerprint_equal(a, b).verdict == Tri::Yes, name);
    }
  }
}

TEST_CASE("nine moves preserve the minvariant on sampled applications") {
  std::mt19937_64 rng(424242);
  auto names = ch_corpus();
  int done = 0;
  while (done < 12) {
    Diagram d = library_diagram(names[rng() % names.size()]);
    MoveId m = nine_moves()[rng() % 9];
    auto sites = find_move_sites(d, m, Dir::Forward);
    if (sites.empty()) continue;
    Diagram nd = apply_move(d, sites[rng() % sites.size()]);
    MInvariantOptions opt;
    opt.check_admissibility = false;
    MInvariant a = minvariant(d, opt);
    MInvariant b = minvariant(nd, opt);
    CHECK_MESSAGE(minvariant_equal(a, b).verdict == Tri::Yes, move_name(m));
    ++done;
  }
}

TEST_CASE("O8 changes the minvariant across the pair") {
  MInvariantOptions opt;
  opt.check_admissibility = false;
  MInvariant m1 = minvariant(library_diagram("d1"), opt);
  MInvariant m2 = minvariant(library_diagram("d2"), opt);
  CHECK(minvariant_equal(m1, m2).verdict == Tri::No);
}
