#include "doctest.h"
#include "openbook/classify.hpp"
#include "openbook/invariants.hpp"
#include "openbook/mcg.hpp"

using namespace openbook;

namespace {

FamilyParams fam(std::int64_t p, std::int64_t n1, std::int64_t n2,
                 std::int64_t n3, std::int64_t n4) {
  FamilyParams v;
  v.p = p;
  v.n[0] = n1;
  v.n[1] = n2;
  v.n[2] = n3;
  v.n[3] = n4;
  return v;
}

OpenBook hopf(std::int64_t k) {
  OpenBook ob;
  ob.surface = make_surface(2);
  ob.monodromy = make_twist_word(
      ob.surface, {TwistFactor{boundary_parallel_curve(ob.surface, 1), k}});
  return ob;
}

}  // namespace

TEST_CASE("the family classifies as the paper's theorem states") {
  OpenBook ob = build_family(fam(1, 6, 6, 6, 6));
  ClassifyOptions opts;
  opts.cap_targets = {{2}};
  Certificate cert = classify(ob, opts);

  CHECK(cert.universally_tight.verdict == Verdict::Proved);
  CHECK(cert.hyperbolic.verdict == Verdict::Proved);
  CHECK(cert.contact_invariant_zero.verdict == Verdict::Proved);
  CHECK(cert.fillable.verdict == Verdict::Disproved);
  CHECK(cert.tight.verdict == Verdict::Proved);
  CHECK(cert.overtwisted.verdict == Verdict::Unknown);

  REQUIRE(cert.cap_witness.has_value());
  CHECK(cert.cap_witness->capped_labels == std::vector<int>{2});
  CHECK(cert.cap_witness->violating_boundary == 1);
  CHECK(replay_cap_off_witness(ob, *cert.cap_witness));

  REQUIRE(cert.penner.has_value());
  CHECK(cert.penner->verdict);

  // every boundary carries a usable lower bound of at least 5
  for (const BoundaryEvidence& ev : cert.fdtc) {
    REQUIRE(ev.lower.has_value());
    CHECK(ev.lower->lower >= 5);
    CHECK(ev.right_veering_checked);
  }
}

TEST_CASE("overtwisted seed is detected directly") {
  OpenBook seed = hopf(-1);
  Certificate cert = classify(seed);
  CHECK(cert.overtwisted.verdict == Verdict::Proved);
  CHECK(cert.tight.verdict == Verdict::Disproved);
  CHECK(cert.contact_invariant_zero.verdict == Verdict::Proved);
  CHECK(cert.fillable.verdict == Verdict::Disproved);
}

TEST_CASE("the positive Hopf book abstains everywhere") {
  OpenBook pos = hopf(1);
  Certificate cert = classify(pos);
  CHECK(cert.overtwisted.verdict == Verdict::Unknown);
  CHECK(cert.contact_invariant_zero.verdict == Verdict::Unknown);
  CHECK(cert.fillable.verdict == Verdict::Unknown);
  CHECK(cert.tight.verdict == Verdict::Unknown);  // coefficient exactly 1
  for (const BoundaryEvidence& ev : cert.fdtc) {
    REQUIRE(ev.exact.has_value());
    CHECK(ev.exact->exact == Rational::of(1));
  }
  CHECK_FALSE(cert.cap_witness.has_value());
}

TEST_CASE("the doubled construction over an overtwisted seed is tight with "
          "vanishing invariant") {
  OpenBook seed = hopf(-1);
  ConstructionParams p;
  p.m = 2;
  p.exponents = {2, 2};
  p.boundary = 1;
  OpenBook once = build_construction(seed, p);
  p.boundary = 3;  // the surviving old boundary landed at label 3
  OpenBook twice = build_construction(once, p);
  REQUIRE(twice.surface.boundary_count == 4);

  Certificate cert = classify(twice);
  CHECK(cert.tight.verdict == Verdict::Proved);
  CHECK(cert.contact_invariant_zero.verdict == Verdict::Proved);
  CHECK(cert.fillable.verdict == Verdict::Disproved);
  CHECK(cert.overtwisted.verdict == Verdict::Unknown);

  // exact coefficient 2 at every boundary
  for (const BoundaryEvidence& ev : cert.fdtc) {
    REQUIRE(ev.exact.has_value());
    CHECK(ev.exact->exact == Rational::of(2));
  }

  // the witness chain (from construction metadata) replays to the seed
  REQUIRE(cert.cap_witness.has_value());
  CHECK(replay_cap_off_witness(twice, *cert.cap_witness));
  CHECK(cert.cap_witness->capped_labels.size() == 2);
  OpenBook replayed = twice;
  for (int l : cert.cap_witness->capped_labels) replayed = cap_off(replayed, l);
  REQUIRE(replayed.surface.boundary_count == 2);
  CHECK(mcg_equal(replayed.surface, replayed.monodromy, seed.monodromy));
}

TEST_CASE("certificates never prove and disprove the same property") {
  for (int k : {-2, -1, 0, 1, 2}) {
    Certificate cert = classify(hopf(k));
    auto bad = [](const PropertyReport& p) { return false; };
    (void)bad;
    bool both_proved = cert.tight.verdict == Verdict::Proved &&
                       cert.overtwisted.verdict == Verdict::Proved;
    CHECK_FALSE(both_proved);
    if (cert.universally_tight.verdict == Verdict::Proved)
      CHECK(cert.tight.verdict == Verdict::Proved);
    if (cert.overtwisted.verdict == Verdict::Proved) {
      CHECK(cert.contact_invariant_zero.verdict == Verdict::Proved);
      CHECK(cert.fillable.verdict == Verdict::Disproved);
    }
  }
}

TEST_CASE("cap search respects hints before defaults") {
  OpenBook ob = build_family(fam(1, 6, 6, 6, 6));
  auto w = cap_off_vanishing_search(ob, {{2}}, 4, 3);
  REQUIRE(w.has_value());
  CHECK(w->capped_labels == std::vector<int>{2});
  CHECK(w->violating_boundary == 1);

  // hints that cannot be capped are skipped gracefully
  auto w2 = cap_off_vanishing_search(ob, {{1}, {2}}, 4, 3);
  REQUIRE(w2.has_value());
  CHECK(w2->capped_labels == std::vector<int>{2});
}

TEST_CASE("degenerate inputs yield all-unknown certificates, not errors") {
  OpenBook disc;
  disc.surface = make_surface(1);
  Certificate cert = classify(disc);
  CHECK(cert.tight.verdict == Verdict::Unknown);
  CHECK(cert.overtwisted.verdict == Verdict::Unknown);
  CHECK(cert.hyperbolic.verdict == Verdict::Unknown);
  REQUIRE(cert.fdtc.size() == 1);
  REQUIRE(cert.fdtc[0].exact.has_value());
  CHECK(cert.fdtc[0].exact->exact == Rational::of(0));
}
