#include "openbook/surface.hpp"

#include <algorithm>
#include <numeric>

#include "openbook/arrangement.hpp"

namespace openbook {

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational{n, d};
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den <
         static_cast<__int128>(o.num) * den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(const Letter& l) {
  return std::to_string(l.chord) + (l.dir > 0 ? "+" : "-");
}

std::string to_string(const CurveWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ",";
    s += to_string(w.letters[i]);
  }
  return s + "]";
}

std::string to_string(const ArcWord& a) {
  std::string s = "arc(" + std::to_string(a.from) + "->" +
                  std::to_string(a.to) + ")[";
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    if (i) s += ",";
    s += to_string(a.letters[i]);
  }
  return s + "]";
}

PlanarSurface make_surface(int b) {
  if (b <= 0) throw invalid_argument("surface needs at least one boundary");

  PlanarSurface S;
  S.boundary_count = b;
  S.chord_copy_slot0.assign(b + 1, -1);
  S.chord_copy_slot1.assign(b + 1, -1);
  S.marked_slot.assign(b + 1, -1);

  auto vertex = [&](int boundary, int chord, bool marked) {
    PlanarSurface::Slot s;
    s.kind = PlanarSurface::SlotKind::Vertex;
    s.boundary = boundary;
    s.chord = chord;
    s.marked = marked;
    S.slots.push_back(s);
    return static_cast<int>(S.slots.size()) - 1;
  };
  auto bseg = [&](int boundary) {
    PlanarSurface::Slot s;
    s.kind = PlanarSurface::SlotKind::BoundarySeg;
    s.boundary = boundary;
    S.slots.push_back(s);
    return static_cast<int>(S.slots.size()) - 1;
  };
  auto cside = [&](int chord, int copy) {
    PlanarSurface::Slot s;
    s.kind = PlanarSurface::SlotKind::ChordSide;
    s.chord = chord;
    s.copy = copy;
    S.slots.push_back(s);
    return static_cast<int>(S.slots.size()) - 1;
  };

  // Counterclockwise around the cut-open disc, interior on the left.
  // Boundary 1 runs p_1, a_2, a_3, ..., a_b; at each attachment a_j the
  // traversal dives along the left copy of chord j, clockwise around
  // boundary j (meeting p_j), and back along the right copy.
  S.marked_slot[1] = vertex(1, 0, true);  // p_1
  if (b == 1) {
    bseg(1);
    return S;
  }
  for (int j = 2; j <= b; ++j) {
    bseg(1);              // boundary-1 piece ending at a_j
    vertex(1, j, false);  // a_j (before the cut)
    S.chord_copy_slot0[j] = cside(j, 0);
    vertex(j, j, false);  // chord foot on boundary j
    bseg(j);
    S.marked_slot[j] = vertex(j, 0, true);  // p_j
    bseg(j);
    vertex(j, j, false);  // chord foot again (after the cut)
    S.chord_copy_slot1[j] = cside(j, 1);
    vertex(1, j, false);  // a_j (after the cut)
  }
  bseg(1);  // closing boundary-1 piece back to p_1
  return S;
}

std::vector<std::string> PlanarSurface::disc_boundary_word() const {
  std::vector<std::string> out;
  for (const Slot& s : slots) {
    switch (s.kind) {
      case SlotKind::Vertex:
        if (s.marked)
          out.push_back("p" + std::to_string(s.boundary));
        else
          out.push_back("corner(c" + std::to_string(s.chord) + ",B" +
                        std::to_string(s.boundary) + ")");
        break;
      case SlotKind::BoundarySeg:
        out.push_back("B" + std::to_string(s.boundary));
        break;
      case SlotKind::ChordSide:
        out.push_back("c" + std::to_string(s.chord) +
                      (s.copy == 0 ? "L" : "R"));
        break;
    }
  }
  return out;
}

namespace {

void check_letters(const PlanarSurface& S, const std::vector<Letter>& ls) {
  for (const Letter& l : ls) {
    if (l.chord < 2 || l.chord > S.boundary_count)
      throw invalid_argument("letter names chord " + std::to_string(l.chord) +
                             " outside 2.." +
                             std::to_string(S.boundary_count));
    if (l.dir != 1 && l.dir != -1)
      throw invalid_argument("letter direction must be +1 or -1");
  }
}

std::vector<Letter> reduce_linear(std::vector<Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<Letter> reduce_cyclic(std::vector<Letter> in) {
  std::vector<Letter> w = reduce_linear(std::move(in));
  std::size_t cut = 0;
  while (w.size() - cut >= 2 && w[cut] == inverse(w.back())) {
    ++cut;
    w.pop_back();
  }
  w.erase(w.begin(), w.begin() + cut);
  return w;
}

bool is_reduced_linear(const std::vector<Letter>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return true;
}

bool is_reduced_cyclic(const std::vector<Letter>& w) {
  if (!is_reduced_linear(w)) return false;
  if (w.size() >= 2 && w.front() == inverse(w.back())) return false;
  return true;
}

// Smallest period of the cyclic word; a proper power never embeds.
std::size_t cyclic_period(const std::vector<Letter>& w) {
  std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (!(w[i] == w[(i + p) % n])) ok = false;
    if (ok) return p;
  }
  return n;
}

// Booth's least cyclic rotation.
std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  std::size_t n = w.size();
  if (n == 0) return w;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = w[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && !(sj == w[(k + i + 1) % n])) {
      if (sj < w[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && !(sj == w[(k + i + 1) % n])) {
      if (sj < w[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = w[(k + i) % n];
  return out;
}

std::vector<Letter> reverse_flip(const std::vector<Letter>& w) {
  std::vector<Letter> out(w.rbegin(), w.rend());
  for (Letter& l : out) l = inverse(l);
  return out;
}

}  // namespace

CurveWord normalize(const PlanarSurface& S, const CurveWord& w) {
  check_letters(S, w.letters);
  CurveWord r{reduce_cyclic(w.letters)};
  if (!r.empty() && !is_embedded(S, r))
    throw invalid_curve("word does not describe an embedded curve: " +
                        to_string(w));
  return r;
}

ArcWord normalize(const PlanarSurface& S, const ArcWord& a) {
  if (a.from < 1 || a.from > S.boundary_count || a.to < 1 ||
      a.to > S.boundary_count)
    throw invalid_argument("arc endpoint label out of range");
  check_letters(S, a.letters);
  ArcWord r{a.from, a.to, reduce_linear(a.letters)};
  if (r.empty() && r.from == r.to)
    throw invalid_curve("arc is trivial (empty loop at p" +
                        std::to_string(r.from) + ")");
  if (!is_embedded(S, r))
    throw invalid_curve("word does not describe an embedded arc: " +
                        to_string(a));
  return r;
}

bool is_embedded(const PlanarSurface& S, const CurveWord& w) {
  if (w.empty()) throw invalid_argument("empty curve word");
  check_letters(S, w.letters);
  std::vector<Letter> r = reduce_cyclic(w.letters);
  if (r.empty()) return true;  // contractible
  if (cyclic_period(r) != r.size()) return false;
  return taut_self_intersection(S, WalkObject::curve(CurveWord{std::move(r)})) ==
         0;
}

bool is_embedded(const PlanarSurface& S, const ArcWord& a) {
  if (a.from < 1 || a.from > S.boundary_count || a.to < 1 ||
      a.to > S.boundary_count)
    throw invalid_argument("arc endpoint label out of range");
  check_letters(S, a.letters);
  ArcWord r{a.from, a.to, reduce_linear(a.letters)};
  if (r.empty()) return r.from != r.to;
  return taut_self_intersection(S, WalkObject::arc(r)) == 0;
}

CurveWord canonical(const PlanarSurface& S, const CurveWord& w) {
  CurveWord r = normalize(S, w);
  if (r.empty()) return r;
  std::vector<Letter> f = least_rotation(r.letters);
  std::vector<Letter> g = least_rotation(reverse_flip(r.letters));
  return CurveWord{std::min(f, g)};
}

ArcWord canonical(const PlanarSurface& S, const ArcWord& a) {
  ArcWord r = normalize(S, a);
  ArcWord rev{r.to, r.from, reverse_flip(r.letters)};
  auto key = [](const ArcWord& x) {
    return std::tuple<int, int, const std::vector<Letter>&>(x.from, x.to,
                                                            x.letters);
  };
  return key(rev) < key(r) ? rev : r;
}

bool isotopic(const PlanarSurface& S, const CurveWord& a, const CurveWord& b) {
  return canonical(S, a) == canonical(S, b);
}

bool isotopic(const PlanarSurface& S, const ArcWord& a, const ArcWord& b) {
  return canonical(S, a) == canonical(S, b);
}

CurveWord curve_from_partition(const PlanarSurface& S,
                               const std::vector<int>& inside) {
  int b = S.boundary_count;
  std::vector<bool> in(b + 1, false);
  for (int x : inside) {
    if (x < 1 || x > b)
      throw invalid_argument("partition names boundary " + std::to_string(x));
    in[x] = true;
  }
  int count = 0;
  for (int i = 1; i <= b; ++i) count += in[i];
  if (count == 0 || count == b)
    throw invalid_argument("partition must be a proper nonempty subset");

  // use the side away from boundary 1
  if (in[1])
    for (int i = 1; i <= b; ++i) in[i] = !in[i];

  CurveWord w;
  for (int j = 2; j <= b; ++j)
    if (in[j]) w.letters.push_back(Letter{j, 1});
  return w;
}

std::vector<int> partition_of(const PlanarSurface& S, const CurveWord& c) {
  if (c.empty()) throw invalid_curve("empty curve has no partition");
  check_letters(S, c.letters);
  std::vector<int> parity(S.boundary_count + 1, 0);
  for (const Letter& l : c.letters) parity[l.chord] ^= 1;
  std::vector<int> side;
  for (int j = 2; j <= S.boundary_count; ++j)
    if (parity[j]) side.push_back(j);
  return side;
}

std::optional<int> is_boundary_parallel(const PlanarSurface& S,
                                        const CurveWord& c) {
  if (c.empty()) throw invalid_curve("empty curve word");
  std::vector<int> side = partition_of(S, c);
  if (side.size() == 1) return side[0];
  if (static_cast<int>(side.size()) == S.boundary_count - 1) return 1;
  return std::nullopt;
}

std::int64_t geometric_intersection(const PlanarSurface& S, const CurveWord& a,
                                    const CurveWord& b) {
  if (a.empty() || b.empty()) throw invalid_curve("empty curve word");
  if (!is_reduced_cyclic(a.letters) || !is_reduced_cyclic(b.letters))
    throw invalid_curve("intersection inputs must be reduced");
  if (!is_embedded(S, a) || !is_embedded(S, b))
    throw invalid_curve("intersection inputs must be embedded");
  if (isotopic(S, a, b)) return 0;
  return taut_intersection(S, WalkObject::curve(a), WalkObject::curve(b));
}

std::int64_t geometric_intersection(const PlanarSurface& S, const CurveWord& a,
                                    const ArcWord& b) {
  if (a.empty()) throw invalid_curve("empty curve word");
  if (!is_reduced_cyclic(a.letters) || !is_reduced_linear(b.letters))
    throw invalid_curve("intersection inputs must be reduced");
  if (!is_embedded(S, a) || !is_embedded(S, b))
    throw invalid_curve("intersection inputs must be embedded");
  return taut_intersection(S, WalkObject::curve(a), WalkObject::arc(b));
}

std::int64_t geometric_intersection(const PlanarSurface& S, const ArcWord& a,
                                    const ArcWord& b) {
  if (!is_reduced_linear(a.letters) || !is_reduced_linear(b.letters))
    throw invalid_curve("intersection inputs must be reduced");
  if (!is_embedded(S, a) || !is_embedded(S, b))
    throw invalid_curve("intersection inputs must be embedded");
  if (isotopic(S, a, b)) return 0;
  return taut_intersection(S, WalkObject::arc(a), WalkObject::arc(b));
}

void validate(const PlanarSurface& S, const MultiCurve& mc) {
  for (const CurveWord& c : mc.components) {
    if (c.empty()) throw invalid_curve("multicurve component is empty");
    if (!is_reduced_cyclic(c.letters))
      throw invalid_curve("multicurve component not reduced");
    if (!is_embedded(S, c))
      throw invalid_curve("multicurve component not embedded");
  }
  for (std::size_t i = 0; i < mc.components.size(); ++i)
    for (std::size_t j = i + 1; j < mc.components.size(); ++j) {
      if (isotopic(S, mc.components[i], mc.components[j]))
        throw invalid_curve("multicurve components are isotopic");
      if (geometric_intersection(S, mc.components[i], mc.components[j]) != 0)
        throw invalid_curve("multicurve components intersect");
    }
}

}  // namespace openbook
