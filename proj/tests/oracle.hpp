#ifndef OPENBOOK_TEST_ORACLE_HPP
#define OPENBOOK_TEST_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "openbook/arrangement.hpp"
#include "openbook/surface.hpp"

namespace openbook::oracle {

// Brute-force reference implementations, independent of the production
// realization: enumerate every ordering of the crossings along each chord
// (and of the arc endpoints at each marked point), count strand
// interleavings directly, and minimize.

// Does some ordering realize the word without self-intersections?
bool embedded(const PlanarSurface& S, const CurveWord& w);
bool embedded(const PlanarSurface& S, const ArcWord& a);

// Minimal crossings between the two objects over all orderings in which
// each object alone is embedded; nullopt when either never embeds.
std::optional<std::int64_t> intersection(const PlanarSurface& S,
                                         const WalkObject& a,
                                         const WalkObject& b);

}  // namespace openbook::oracle

#endif
