#ifndef OPENBOOK_MCG_HPP
#define OPENBOOK_MCG_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "openbook/surface.hpp"
#include "openbook/types.hpp"

namespace openbook {

// One Dehn twist factor.  Positive powers are right-handed twists.
struct TwistFactor {
  CurveWord curve;
  std::int64_t power = 0;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

// A mapping class written as a product of Dehn twists.  Factors are stored
// in writing order; the rightmost factor acts first.
struct TwistWord {
  std::vector<TwistFactor> factors;

  bool empty() const { return factors.empty(); }
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

// Drops zero powers and normalizes every twist curve; throws when a curve
// is invalid or inessential.
TwistWord make_twist_word(const PlanarSurface& S,
                          std::vector<TwistFactor> factors);
TwistWord inverse(const TwistWord& w);
TwistWord concat(const TwistWord& a, const TwistWord& b);

struct ConstructionRecord {
  int boundary = 0;                    // the boundary that was replaced
  int m = 0;
  std::vector<std::int64_t> exponents; // n_1..n_m
  CurveWord gamma;                     // old boundary as an interior curve
  std::vector<int> new_labels;         // labels of B'_1..B'_m
};

struct FamilyParams {
  std::int64_t p = 0;
  std::int64_t n[4] = {0, 0, 0, 0};
};

struct Metadata {
  std::optional<FamilyParams> family;
  std::vector<ConstructionRecord> constructions;
  std::vector<std::pair<std::string, ArcWord>> named_arcs;
  std::optional<MultiCurve> penner_positive;  // candidate Gamma_1
  std::optional<MultiCurve> penner_negative;  // candidate Gamma_2
};

struct OpenBook {
  PlanarSurface surface;
  TwistWord monodromy;
  Metadata metadata;
};

struct ConstructionParams {
  int boundary = 0;
  int m = 0;
  std::vector<std::int64_t> exponents;  // n_1..n_m
};

// Image of a curve or arc under the mapping class (factors act right to
// left).  A single twist splices one detour around the twist curve at each
// point of a minimal-position arrangement, then reduces.
CurveWord apply(const PlanarSurface& S, const TwistWord& phi,
                const CurveWord& x);
ArcWord apply(const PlanarSurface& S, const TwistWord& phi, const ArcWord& x);
CurveWord apply_twist(const PlanarSurface& S, const CurveWord& c,
                      std::int64_t power, const CurveWord& x);
ArcWord apply_twist(const PlanarSurface& S, const CurveWord& c,
                    std::int64_t power, const ArcWord& x);

// Word problem for mapping classes rel boundary, by the Alexander method:
// two words are equal iff they agree on a fixed filling arc system.
bool mcg_equal(const PlanarSurface& S, const TwistWord& phi,
               const TwistWord& psi);
bool mcg_is_identity(const PlanarSurface& S, const TwistWord& phi);

// The arc system used by mcg_equal; verified once to cut the surface into
// discs.
std::vector<ArcWord> filling_system(const PlanarSurface& S);

// Removes boundary-parallel factors, returning the stripped word and the
// net twist exponent at each boundary.
std::pair<TwistWord, std::map<int, std::int64_t>> strip_boundary_twists(
    const PlanarSurface& S, const TwistWord& w);

// Glues a disc to the named boundary; twists about curves that become
// trivial disappear and every other curve is re-expressed on the smaller
// surface.
OpenBook cap_off(const OpenBook& ob, int boundary);

// Replaces the named boundary with m new boundaries B'_1..B'_m and composes
// the monodromy with one negative twist about the old boundary curve and
// positive twists about the new boundaries:
//   phi' = phi . t_gamma^{-n_m} . t_{B'_1}^{n_1} ... t_{B'_m}^{n_m}.
// Capping off B'_1..B'_{m-1} recovers the input book.
OpenBook build_construction(const OpenBook& ob, const ConstructionParams& p);

// The five-parameter family on the four-holed sphere:
//   phi_v = t_alpha^{-n_1-1} . t_beta^{p} . t_{B_1}^{n_1} ... t_{B_4}^{n_4}
// with alpha separating {B_2,B_3} and beta separating {B_1,B_2}.
OpenBook build_family(const FamilyParams& v);

// canonical curves used throughout
CurveWord boundary_parallel_curve(const PlanarSurface& S, int boundary);

}  // namespace openbook

#endif
