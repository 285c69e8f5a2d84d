#ifndef OPENBOOK_SURFACE_HPP
#define OPENBOOK_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "openbook/types.hpp"

namespace openbook {

// Canonical model of the b-holed sphere.
//
// Boundary 1 is the outer circle, boundaries 2..b are holes laid out in
// index order.  The marked point p_1 sits on boundary 1; walking
// counterclockwise from p_1 one meets the attachments of the cut chords
// c_2, ..., c_b in index order.  Chord c_j runs from boundary 1 to
// boundary j, attaching on boundary j immediately after the marked
// point p_j in the boundary-of-surface orientation.  Chords are pairwise
// disjoint and avoid all marked points.
//
// Cutting along every chord opens the surface into a single disc.  The
// `slots` table records the polygon boundary, one entry per side or
// vertex, in counterclockwise order with the disc interior on the left.
// Every combinatorial operation below works inside this polygon.
struct PlanarSurface {
  enum class SlotKind : std::uint8_t {
    Vertex,      // marked point or chord attachment corner
    BoundarySeg, // piece of some boundary circle
    ChordSide,   // one of the two copies of a cut chord
  };

  struct Slot {
    SlotKind kind;
    std::int32_t boundary = 0;  // for Vertex (marked point) / BoundarySeg
    std::int32_t chord = 0;     // for ChordSide and attachment corners
    std::int32_t copy = -1;     // 0 = left copy, 1 = right copy
    bool marked = false;        // Vertex: true if a marked point p_i
  };

  std::int32_t boundary_count = 0;
  std::vector<Slot> slots;

  // slot lookups, filled at construction
  std::vector<std::int32_t> chord_copy_slot0;  // by chord index (2..b)
  std::vector<std::int32_t> chord_copy_slot1;
  std::vector<std::int32_t> marked_slot;  // by boundary index (1..b)

  int num_slots() const { return static_cast<int>(slots.size()); }

  // Human-readable boundary word of the cut-open disc.
  std::vector<std::string> disc_boundary_word() const;

  friend bool operator==(const PlanarSurface& a, const PlanarSurface& b) {
    return a.boundary_count == b.boundary_count;
  }
};

// Builds the canonical b-holed sphere.  b <= 0 is invalid.
PlanarSurface make_surface(int b);

// The canonical simple closed curve separating the boundaries in `inside`
// from the rest.  `inside` must be a proper nonempty subset of {1..b}.
CurveWord curve_from_partition(const PlanarSurface& S,
                               const std::vector<int>& inside);

// Reduced normal form: removes every bigon against the cut system.  The
// result is the unique reduced word of the isotopy class (cyclic reduction
// for curves, linear for arcs).  Throws invalid_curve when the input does
// not describe an embedded object.
CurveWord normalize(const PlanarSurface& S, const CurveWord& w);
ArcWord normalize(const PlanarSurface& S, const ArcWord& a);

// True iff the word admits a placement of its chord crossings making all
// strands pairwise disjoint.  Malformed words throw invalid_argument.
bool is_embedded(const PlanarSurface& S, const CurveWord& w);
bool is_embedded(const PlanarSurface& S, const ArcWord& a);

// Minimal geometric intersection number over isotopy (rel endpoints for
// arcs).  Inputs must be reduced and embedded.
std::int64_t geometric_intersection(const PlanarSurface& S,
                                    const CurveWord& a, const CurveWord& b);
std::int64_t geometric_intersection(const PlanarSurface& S,
                                    const CurveWord& a, const ArcWord& b);
std::int64_t geometric_intersection(const PlanarSurface& S,
                                    const ArcWord& a, const ArcWord& b);

// Boundary label when the curve is isotopic to a boundary circle.
std::optional<int> is_boundary_parallel(const PlanarSurface& S,
                                        const CurveWord& c);

// The two-sided boundary partition cut out by a reduced curve: the side
// containing boundary 1 is omitted; the returned (sorted) set is the side
// away from boundary 1.  Empty word throws invalid_curve.
std::vector<int> partition_of(const PlanarSurface& S, const CurveWord& c);

// Canonical forms used for equality of isotopy classes.
CurveWord canonical(const PlanarSurface& S, const CurveWord& w);
ArcWord canonical(const PlanarSurface& S, const ArcWord& a);
bool isotopic(const PlanarSurface& S, const CurveWord& a, const CurveWord& b);
bool isotopic(const PlanarSurface& S, const ArcWord& a, const ArcWord& b);

// Multicurve validation: components pairwise disjoint and non-isotopic.
void validate(const PlanarSurface& S, const MultiCurve& mc);

}  // namespace openbook

#endif
