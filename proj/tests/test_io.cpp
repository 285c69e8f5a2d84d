#include "doctest.h"
#include "openbook/io.hpp"

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

}  // namespace

TEST_CASE("openbook documents round-trip") {
  OpenBook ob = build_family(fam(1, 6, 6, 6, 6));
  json doc = emit_openbook(ob);
  OpenBook back = parse_openbook(doc);
  CHECK(back.surface.boundary_count == 4);
  CHECK(mcg_equal(ob.surface, ob.monodromy, back.monodromy));
  CHECK(emit_openbook(back) == doc);

  // a construction book carries its metadata through
  OpenBook seed;
  seed.surface = make_surface(2);
  seed.monodromy = make_twist_word(
      seed.surface,
      {TwistFactor{boundary_parallel_curve(seed.surface, 2), -1}});
  ConstructionParams p;
  p.boundary = 2;
  p.m = 3;
  p.exponents = {2, 3, 4};
  OpenBook built = build_construction(seed, p);
  json doc2 = emit_openbook(built);
  OpenBook back2 = parse_openbook(doc2);
  REQUIRE(back2.metadata.constructions.size() == 1);
  CHECK(back2.metadata.constructions[0].m == 3);
  CHECK(emit_openbook(back2) == doc2);
}

TEST_CASE("document parsing diagnoses bad input") {
  CHECK_THROWS_AS(parse_openbook_text("not json"), parse_error);
  CHECK_THROWS_AS(parse_openbook_text("{}"), parse_error);
  CHECK_THROWS_AS(
      parse_openbook_text(R"({"schema":"openbook/1","boundary_count":0})"),
      parse_error);
  CHECK_THROWS_AS(
      parse_openbook_text(
          R"({"schema":"openbook/1","boundary_count":3,
              "monodromy":[{"curve":{"type":"partition","inside":[9]},"power":1}]})"),
      parse_error);
  CHECK_THROWS_AS(
      parse_openbook_text(
          R"({"schema":"openbook/1","boundary_count":3,
              "monodromy":[{"curve":{"type":"word",
              "crossings":[[2,1],[2,1]]},"power":1}]})"),
      parse_error);

  // power zero entries are accepted and dropped
  OpenBook ob = parse_openbook_text(
      R"({"schema":"openbook/1","boundary_count":3,
          "monodromy":[{"curve":{"type":"boundary","label":2},"power":0}]})");
  CHECK(ob.monodromy.empty());
}

TEST_CASE("curve specs parse") {
  PlanarSurface S = make_surface(4);
  CHECK(parse_curve_spec(S, "partition:2,3") ==
        curve_from_partition(S, {2, 3}));
  CHECK(parse_curve_spec(S, "boundary:2") == boundary_parallel_curve(S, 2));
  CurveWord w = parse_curve_spec(S, "word:2+,3+");
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(parse_curve_spec(S, "nope:1"), parse_error);
  CHECK_THROWS_AS(parse_curve_spec(S, "partition:"), parse_error);

  ArcWord a = parse_arc_spec(S, "1-2");
  CHECK(a.from == 1);
  CHECK(a.to == 2);
  ArcWord a2 = parse_arc_spec(S, "4-3:2+");
  CHECK(a2.letters.size() == 1);
}

TEST_CASE("reports are deterministic and carry the certificate") {
  OpenBook ob = build_family(fam(1, 6, 6, 6, 6));
  ClassifyOptions opts;
  opts.cap_targets = {{2}};
  Certificate cert = classify(ob, opts);
  json r1 = emit_report(ob, cert, 17);
  json r2 = emit_report(ob, cert, 99);
  // identical modulo the metadata header
  r1["meta"].erase("timing_ms");
  r2["meta"].erase("timing_ms");
  CHECK(r1 == r2);
  CHECK(r1.at("certificate").at("tight").at("verdict") == "proved");
  CHECK(r1.at("certificate").at("hyperbolic").at("verdict") == "proved");
  CHECK(r1.at("certificate").at("fillable").at("verdict") == "disproved");
  CHECK(r1.at("fdtc").size() == 4);
}

TEST_CASE("a hand-written partition-curve document matches the builder") {
  OpenBook hand = parse_openbook_text(R"({
    "schema": "openbook/1",
    "boundary_count": 4,
    "monodromy": [
      {"curve": {"type": "partition", "inside": [1, 2]}, "power": -7},
      {"curve": {"type": "partition", "inside": [2, 3]}, "power": 1},
      {"curve": {"type": "boundary", "label": 1}, "power": 6},
      {"curve": {"type": "boundary", "label": 2}, "power": 6},
      {"curve": {"type": "boundary", "label": 3}, "power": 6},
      {"curve": {"type": "boundary", "label": 4}, "power": 6}
    ]})");
  OpenBook built = build_family(fam(1, 6, 6, 6, 6));
  CHECK(mcg_equal(hand.surface, hand.monodromy, built.monodromy));
}
