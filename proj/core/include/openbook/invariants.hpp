#ifndef OPENBOOK_INVARIANTS_HPP
#define OPENBOOK_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "openbook/mcg.hpp"
#include "openbook/surface.hpp"
#include "openbook/types.hpp"

namespace openbook {

// Fractional Dehn twist coefficient evidence at one boundary.
struct FdtcBound {
  int boundary = 0;
  enum class Kind { Exact, LowerBound } kind = Kind::LowerBound;
  Rational exact;             // Kind::Exact
  std::int64_t lower = 0;     // Kind::LowerBound
  std::string provenance;     // which route produced it
  ArcWord witness_arc;        // lower bounds: the maximizing arc

  std::string value_str() const {
    return kind == Kind::Exact ? exact.str() : std::to_string(lower);
  }
};

// Searches for an arc from the marked point of B whose image departs
// strictly to the left; finding one certifies the monodromy is not
// right-veering at B.  Bounded by word length <= depth; no violation found
// proves nothing.
std::optional<ArcWord> find_left_veering_arc(const OpenBook& ob, int boundary,
                                             int depth);

// Departure comparison at the shared endpoint on B: -1 when the image of
// the arc leaves strictly to the left of the arc, 0 when isotopic, +1 when
// strictly to the right.
int veer_direction(const PlanarSurface& S, const ArcWord& arc,
                   const ArcWord& image, int boundary);

// Kazez-Roberts signed count of boundary-proximate intersections of the
// arc with its image; a lower bound for the fractional Dehn twist
// coefficient when the monodromy is right-veering at B.
std::int64_t kr_count(const OpenBook& ob, int boundary, const ArcWord& arc);

// Best Kazez-Roberts bound over the candidate arcs (defaults: the spanning
// arcs at B plus any metadata arcs with an endpoint on B).
FdtcBound fdtc_lower_bound(const OpenBook& ob, int boundary,
                           const std::vector<ArcWord>& arcs = {});

// Exact coefficient via the boundary-periodic normal form, when the word
// is a product of boundary-parallel twists up to mapping class equality.
std::optional<FdtcBound> fdtc_boundary_periodic(const OpenBook& ob,
                                                int boundary);

// Exact coefficient via one reduction along an invariant curve gamma whose
// side containing B carries only boundary-parallel twisting.
std::optional<FdtcBound> fdtc_via_reduction(const OpenBook& ob, int boundary,
                                            const CurveWord& gamma);

// Best exact evidence: boundary-periodic route, then reduction along the
// candidate curves (construction metadata plus partition curves disjoint
// from the twist curves).
std::optional<FdtcBound> fdtc_exact(const OpenBook& ob, int boundary,
                                    const std::vector<CurveWord>& hints = {});

// True iff the complement of the union is a disjoint union of discs and
// boundary-parallel annuli (one boundary circle each).  Components may
// cross each other; each must be reduced and embedded.
bool fills(const PlanarSurface& S, const std::vector<CurveWord>& components);
bool fills(const PlanarSurface& S, const MultiCurve& mc);

// True iff the complement is a union of discs; the criterion for the
// Alexander arc system.
bool fills_to_discs(const PlanarSurface& S, const std::vector<ArcWord>& arcs);

struct PennerCertificate {
  MultiCurve gamma1, gamma2;
  bool multicurves_ok = false;  // internal disjointness / non-isotopy
  bool sign_ok = false;         // +1 twists on gamma1, -1 on gamma2 only
  bool coverage_ok = false;     // every component twisted at least once
  bool fill_ok = false;         // gamma1 u gamma2 fills the surface
  bool boundary_stripped = false;
  bool verdict = false;
  std::string diagnostic;
};

// Certifies the monodromy pseudo-Anosov by Penner's criterion after
// stripping boundary-parallel twists.  A failed check yields verdict false
// with a diagnostic, not an error.
PennerCertificate penner_certificate(const OpenBook& ob,
                                     const MultiCurve& gamma1,
                                     const MultiCurve& gamma2);

}  // namespace openbook

#endif
