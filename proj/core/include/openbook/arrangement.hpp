#ifndef OPENBOOK_ARRANGEMENT_HPP
#define OPENBOOK_ARRANGEMENT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "openbook/surface.hpp"
#include "openbook/types.hpp"

namespace openbook {

// A curve or arc to be realized inside the cut-open polygon.
struct WalkObject {
  bool is_arc = false;
  std::int32_t from = 1;  // arcs only: marked-point labels
  std::int32_t to = 1;
  std::vector<Letter> letters;  // reduced word

  static WalkObject curve(const CurveWord& w) {
    return WalkObject{false, 1, 1, w.letters};
  }
  static WalkObject arc(const ArcWord& a) {
    return WalkObject{true, a.from, a.to, a.letters};
  }
};

// Concrete drawing of a family of reduced words.
//
// Every chord crossing is ranked along its chord by walking the rays of
// the incident strands in lockstep until their itineraries split; the
// split is resolved by the cyclic order of the polygon sides (the nesting
// rule).  Each word alone is drawn without self-intersections, which is
// all the twist splice and the signed Kazez-Roberts counts require: extra
// crossings between different words cancel after reduction or in signed
// sums.  Exact minimal counts come from taut_intersection below; pass
// exact_small when the drawing itself must be minimal (face tracing), and
// the placement is re-searched if the heuristic order is not tight.
//
// Strands are straight chords between convex-position coordinates, so all
// local questions (order of crossings along a strand, crossing signs) are
// exact integer geometry.
//
// Callers must not pass two objects that are parallel (isotopic) to each
// other, nor a closed word that is a proper power; rays of such pairs
// never diverge.  Dedup first.
class Arrangement {
 public:
  Arrangement(const PlanarSurface& S, std::vector<WalkObject> objects,
              bool exact_small = false);

  struct Strand {
    std::int64_t a = 0;  // global coordinate of the walk-start endpoint
    std::int64_t b = 0;  // global coordinate of the walk-end endpoint
  };

  int object_count() const { return static_cast<int>(objects_.size()); }
  const WalkObject& object(int i) const { return objects_[i]; }
  const std::vector<Strand>& strands_of(int obj) const {
    return strands_[obj];
  }

  // Number of transverse intersections between the two objects in the
  // realized (taut) position; equals the geometric intersection number for
  // reduced embedded inputs.
  std::int64_t crossings_between(int objA, int objB) const;

  // Self-intersections of one object in the realized position; zero iff
  // the word is embeddable.
  std::int64_t self_crossings(int obj) const;

  // Crossings of object x with the listed objects, in order along x's walk.
  // sign_l2r is +1 when the partner strand crosses x's strand from x's
  // left to x's right.
  struct WalkCrossing {
    int x_strand = 0;
    int y_obj = 0;
    int y_strand = 0;
    int sign_l2r = 0;
  };
  std::vector<WalkCrossing> crossings_along(int x,
                                            const std::vector<int>& ys) const;

  // Rank of an arc endpoint among all arc endpoints attached at the same
  // marked point, in polygon boundary order. Departure comparisons for
  // right-veering tests; ties (parallel arcs) share a rank.
  int endpoint_rank(int obj, bool at_from) const;

  // raw access for the subdivision machinery
  std::int64_t total_coords() const { return next_coord_; }
  const PlanarSurface& surface() const { return *S_; }

  // Per chord, crossing identities sorted by position along the chord
  // (from the boundary-1 end).  Each entry is (object, letter index).
  struct ChordHit {
    int obj;
    int letter;
  };
  const std::vector<ChordHit>& chord_order(int chord) const;

  // coordinate bookkeeping exposed for the face tracer
  struct CoordInfo {
    int slot = -1;       // polygon slot this coordinate lies in
    int obj = -1;        // owning object for avatars/attachments, else -1
    int letter = -1;     // letter index for chord avatars
    bool is_corner = false;
  };
  const std::vector<CoordInfo>& coords() const { return coord_info_; }
  std::int64_t corner_coord(int slot) const;  // coordinate of a vertex slot
  std::int64_t avatar_coord(int obj, int letter, int copy) const;

 private:
  const PlanarSurface* S_;
  std::vector<WalkObject> objects_;
  std::vector<std::vector<Strand>> strands_;
  std::vector<std::vector<ChordHit>> chord_order_;  // by chord index
  std::vector<std::vector<std::pair<int, bool>>> vertex_order_;  // by slot
  std::vector<int> endpoint_rank_from_, endpoint_rank_to_;
  std::vector<std::int64_t> corner_coord_;
  std::vector<CoordInfo> coord_info_;
  std::int64_t next_coord_ = 0;

  // coordinates of avatars: per object, per letter, two copies
  std::vector<std::vector<std::array<std::int64_t, 2>>> avatar_coord_;
  std::vector<std::int64_t> from_coord_, to_coord_;

  void realize();
  void assign_coordinates();
  void make_exact_small();
};

// Minimal geometric intersection number of two reduced words, computed
// without choosing a placement: strand pairs whose four endpoint slots
// interleave are forced to cross, and every remaining crossing lives in a
// corridor (a maximal run of the two walks through the same polygon faces,
// parallel or antiparallel) and occurs exactly when the corridor's two end
// resolutions disagree.  Exact for embedded reduced inputs, including
// isotopic ones.
std::int64_t taut_intersection(const PlanarSurface& S, const WalkObject& a,
                               const WalkObject& b);

// Minimal self-intersection count by the same decomposition; zero iff the
// reduced word is embeddable.  Closed proper powers must be excluded by
// the caller.
std::int64_t taut_self_intersection(const PlanarSurface& S,
                                    const WalkObject& a);

// One complementary region of a family of curves/arcs on the surface.
struct Region {
  int chi = 0;                    // Euler characteristic of the closure
  std::vector<int> boundaries;    // surface boundary labels it touches
  std::int64_t faces = 0;
};

// Complementary regions of the realized family, with chord sides glued
// back.  The union of the inputs is cut out of the surface; each region is
// reported with its Euler characteristic and the boundary circles it
// contains.  Exact, small-scale computational geometry: inputs are expected
// to stay at a few hundred crossings.
std::vector<Region> complementary_regions(const PlanarSurface& S,
                                          const std::vector<WalkObject>& objs);

}  // namespace openbook

#endif
