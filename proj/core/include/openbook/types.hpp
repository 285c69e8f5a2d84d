#ifndef OPENBOOK_TYPES_HPP
#define OPENBOOK_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace openbook {

// Thrown when an argument is structurally wrong (bad label, bad size, ...).
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a word fails to describe an embedded curve or arc.
class invalid_curve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failure; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One transverse crossing of a cut chord.  `chord` is the chord index
// (chords are labelled 2..b, chord j runs from boundary 1 to boundary j).
// `dir` is +1 when the crossing passes from the left side of the chord to
// the right side, where the chord is oriented from boundary 1 to boundary j
// and left/right are taken in the surface orientation.  dir is -1 otherwise.
struct Letter {
  std::int32_t chord = 0;
  std::int32_t dir = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return Letter{l.chord, -l.dir}; }

// Cyclic word of chord crossings encoding an isotopy class of simple closed
// curve.  Reduced words are complete invariants; see surface.hpp.
struct CurveWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const CurveWord&, const CurveWord&) = default;
};

// Linear word of chord crossings for a properly embedded arc running from
// the marked point of boundary `from` to the marked point of boundary `to`.
// Isotopies fix endpoints pointwise.
struct ArcWord {
  std::int32_t from = 1;
  std::int32_t to = 1;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const ArcWord&, const ArcWord&) = default;
};

// Finite set of pairwise disjoint, pairwise non-isotopic essential curves.
struct MultiCurve {
  std::vector<CurveWord> components;

  bool empty() const { return components.empty(); }
  std::size_t size() const { return components.size(); }

  friend bool operator==(const MultiCurve&, const MultiCurve&) = default;
};

// Exact rational with 64-bit parts.  Values produced here stay tiny
// (FDTC numerators/denominators of small open books).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d = 1);
  friend bool operator==(const Rational&, const Rational&) = default;
  bool operator<(const Rational& o) const;
  std::string str() const;
};

std::string to_string(const Letter& l);
std::string to_string(const CurveWord& w);
std::string to_string(const ArcWord& a);

}  // namespace openbook

#endif
