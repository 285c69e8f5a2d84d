#include "openbook/mcg.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "openbook/arrangement.hpp"
#include "openbook/invariants.hpp"

namespace openbook {

namespace {

std::vector<Letter> reduce_linear_letters(std::vector<Letter> in) {
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

std::vector<Letter> reduce_cyclic_letters(std::vector<Letter> in) {
  std::vector<Letter> w = reduce_linear_letters(std::move(in));
  std::size_t cut = 0;
  while (w.size() - cut >= 2 && w[cut] == inverse(w.back())) {
    ++cut;
    w.pop_back();
  }
  w.erase(w.begin(), w.begin() + cut);
  return w;
}

// Shared splice: walks the object, inserting one detour around the twist
// curve at each minimal-position crossing.  A right-handed twist (power>0)
// turns the image onto the twist curve heading to the right of the walk,
// which is the forward direction of c exactly when c crosses the walk from
// left to right.
std::vector<Letter> splice(const PlanarSurface& S, const WalkObject& xo,
                           const CurveWord& c, std::int64_t power) {
  Arrangement arr(S, {xo, WalkObject::curve(c)});
  auto crossings = arr.crossings_along(0, {1});
  if (crossings.empty()) return xo.letters;

  std::int64_t loops = power < 0 ? -power : power;
  int clen = static_cast<int>(c.letters.size());
  const std::int64_t cap = std::int64_t(1) << 28;
  if (loops > cap ||
      static_cast<std::int64_t>(crossings.size()) * loops * clen +
              static_cast<std::int64_t>(xo.letters.size()) >
          cap)
    throw invalid_argument("twist image too large to materialize");

  auto detour = [&](int c_strand, int sign_l2r) {
    std::vector<Letter> d;
    bool forward = (power > 0) == (sign_l2r > 0);
    d.reserve(loops * clen);
    if (forward) {
      for (std::int64_t k = 0; k < loops * clen; ++k)
        d.push_back(c.letters[(c_strand + 1 + k) % clen]);
    } else {
      for (std::int64_t k = 0; k < loops * clen; ++k)
        d.push_back(inverse(
            c.letters[((c_strand - k) % clen + clen) % clen]));
    }
    return d;
  };

  int nletters = static_cast<int>(xo.letters.size());
  int nstrands = xo.is_arc ? nletters + 1 : nletters;
  std::vector<Letter> out;
  std::size_t ci = 0;
  for (int s = 0; s < nstrands; ++s) {
    // for arcs, strand s precedes letter s; for curves, letter s precedes
    // strand s
    if (!xo.is_arc) out.push_back(xo.letters[s]);
    while (ci < crossings.size() && crossings[ci].x_strand == s) {
      auto d = detour(crossings[ci].y_strand, crossings[ci].sign_l2r);
      out.insert(out.end(), d.begin(), d.end());
      ++ci;
    }
    if (xo.is_arc && s < nletters) out.push_back(xo.letters[s]);
  }
  return out;
}

void validate_twist_curve(const PlanarSurface& S, const CurveWord& c) {
  if (c.empty()) throw invalid_curve("twist about a trivial curve");
  CurveWord n = normalize(S, c);
  if (n.letters != c.letters)
    throw invalid_curve("twist curve must be reduced: " + to_string(c));
}

}  // namespace

TwistWord make_twist_word(const PlanarSurface& S,
                          std::vector<TwistFactor> factors) {
  TwistWord w;
  for (TwistFactor& f : factors) {
    if (f.power == 0) continue;
    CurveWord n = normalize(S, f.curve);
    if (n.empty()) throw invalid_curve("twist about a trivial curve");
    w.factors.push_back(TwistFactor{std::move(n), f.power});
  }
  return w;
}

TwistWord inverse(const TwistWord& w) {
  TwistWord out;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.factors.push_back(TwistFactor{it->curve, -it->power});
  return out;
}

TwistWord concat(const TwistWord& a, const TwistWord& b) {
  TwistWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

CurveWord apply_twist(const PlanarSurface& S, const CurveWord& c,
                      std::int64_t power, const CurveWord& x) {
  if (power == 0 || x.empty()) return x;
  validate_twist_curve(S, c);
  if (isotopic(S, c, x)) return x;
  std::vector<Letter> img =
      splice(S, WalkObject::curve(x), c, power);
  return CurveWord{reduce_cyclic_letters(std::move(img))};
}

ArcWord apply_twist(const PlanarSurface& S, const CurveWord& c,
                    std::int64_t power, const ArcWord& x) {
  if (power == 0) return x;
  validate_twist_curve(S, c);
  std::vector<Letter> img = splice(S, WalkObject::arc(x), c, power);
  return ArcWord{x.from, x.to, reduce_linear_letters(std::move(img))};
}

CurveWord apply(const PlanarSurface& S, const TwistWord& phi,
                const CurveWord& x) {
  CurveWord cur = normalize(S, x);
  for (auto it = phi.factors.rbegin(); it != phi.factors.rend(); ++it)
    cur = apply_twist(S, it->curve, it->power, cur);
  return cur;
}

ArcWord apply(const PlanarSurface& S, const TwistWord& phi, const ArcWord& x) {
  ArcWord cur = normalize(S, x);
  for (auto it = phi.factors.rbegin(); it != phi.factors.rend(); ++it)
    cur = apply_twist(S, it->curve, it->power, cur);
  return cur;
}

CurveWord boundary_parallel_curve(const PlanarSurface& S, int boundary) {
  if (boundary < 1 || boundary > S.boundary_count)
    throw invalid_argument("unknown boundary label");
  if (S.boundary_count < 2)
    throw invalid_argument("the disc has no essential curves");
  return curve_from_partition(S, {boundary});
}

std::vector<ArcWord> filling_system(const PlanarSurface& S) {
  int b = S.boundary_count;
  std::vector<ArcWord> sys;
  if (b == 1) return sys;  // mapping class group of the disc is trivial
  // straight spanning arcs plus once-wound companions; the pair at each
  // boundary cuts open the collar zone that a single spanning arc only
  // touches, and the whole system cuts the page into discs
  for (int j = 2; j <= b; ++j) sys.push_back(ArcWord{1, j, {}});
  for (int j = 2; j <= b; ++j) sys.push_back(ArcWord{1, j, {Letter{j, 1}}});
  return sys;
}

namespace {

// The word problem is only sound when the comparison system cuts the
// surface into discs; checked once per page size, abort otherwise.
void require_filling_system(const PlanarSurface& S,
                            const std::vector<ArcWord>& sys) {
  if (S.boundary_count == 1) return;
  static std::mutex mu;
  static std::set<int> verified;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (verified.count(S.boundary_count)) return;
  }
  if (!fills_to_discs(S, sys))
    throw internal_error("comparison arc system does not cut the page into "
                         "discs");
  std::lock_guard<std::mutex> lock(mu);
  verified.insert(S.boundary_count);
}

}  // namespace

bool mcg_is_identity(const PlanarSurface& S, const TwistWord& phi) {
  std::vector<ArcWord> sys = filling_system(S);
  require_filling_system(S, sys);
  for (const ArcWord& e : sys) {
    if (canonical(S, apply(S, phi, e)) != canonical(S, e)) return false;
  }
  return true;
}

bool mcg_equal(const PlanarSurface& S, const TwistWord& phi,
               const TwistWord& psi) {
  for (const TwistFactor& f : phi.factors) validate_twist_curve(S, f.curve);
  for (const TwistFactor& f : psi.factors) validate_twist_curve(S, f.curve);
  std::vector<ArcWord> sys = filling_system(S);
  require_filling_system(S, sys);
  for (const ArcWord& e : sys) {
    if (canonical(S, apply(S, phi, e)) != canonical(S, apply(S, psi, e)))
      return false;
  }
  return true;
}

std::pair<TwistWord, std::map<int, std::int64_t>> strip_boundary_twists(
    const PlanarSurface& S, const TwistWord& w) {
  TwistWord kept;
  std::map<int, std::int64_t> exps;
  for (const TwistFactor& f : w.factors) {
    std::optional<int> bp = is_boundary_parallel(S, f.curve);
    if (bp)
      exps[*bp] += f.power;
    else
      kept.factors.push_back(f);
  }
  return {kept, exps};
}

// ---------------------------------------------------------------------
// capping off

namespace {

// letters after capping a boundary with label >= 2: crossings of the dead
// chord vanish, higher chords shift down
std::vector<Letter> cap_rewrite(const std::vector<Letter>& w, int dead) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (l.chord == dead) continue;
    out.push_back(Letter{l.chord > dead ? l.chord - 1 : l.chord, l.dir});
  }
  return out;
}

// Re-expression of a curve after capping boundary 1: read the crossing
// sequence against a fan of arcs from p_2 that is isotopic, in the capped
// surface, to the canonical cut system of the smaller surface.  The
// canonical chord to the k-th remaining hole runs below the intermediate
// holes, crossing each old chord on the way once.
std::vector<Letter> cap1_reexpress(const PlanarSurface& S,
                                   const CurveWord& w) {
  int b = S.boundary_count;
  if (b == 2) return {};  // every curve dies on the disc
  std::vector<WalkObject> objs;
  objs.push_back(WalkObject::curve(w));
  std::vector<int> ys;
  for (int j = 3; j <= b; ++j) {
    ArcWord fan{2, j, {}};
    for (int c = 3; c < j; ++c) fan.letters.push_back(Letter{c, 1});
    objs.push_back(WalkObject::arc(fan));
    ys.push_back(j - 2);
  }
  // the fan must be drawn as an honest cut system: arcs pairwise disjoint
  // and the curve in minimal position against them
  Arrangement arr(S, objs, /*exact_small=*/true);
  auto crossings = arr.crossings_along(0, ys);
  std::vector<Letter> out;
  for (const auto& c : crossings) {
    // fan object k is the arc to p_{k+2}, i.e. chord k+1 after relabeling;
    // the fan arc is traversed with the new chord orientation
    out.push_back(Letter{c.y_obj + 1, -c.sign_l2r});
  }
  return out;
}

}  // namespace

OpenBook cap_off(const OpenBook& ob, int boundary) {
  int b = ob.surface.boundary_count;
  if (b <= 1)
    throw invalid_argument("cannot cap off the last boundary component");
  if (boundary < 1 || boundary > b)
    throw invalid_argument("unknown boundary label");
  // Capping boundary 1 re-roots the cut system; the re-expression is exact
  // for small pages only.  Books built here keep their cap-off targets at
  // labels >= 2, so nothing in the pipeline needs the missing case.
  if (boundary == 1 && b > 3)
    throw invalid_argument(
        "capping boundary 1 is supported only on pages with at most 3 "
        "boundary components; cap another boundary or rebuild the book");

  OpenBook out;
  out.surface = make_surface(b - 1);

  auto rewrite = [&](const CurveWord& c) -> CurveWord {
    std::vector<Letter> letters = boundary >= 2
                                      ? cap_rewrite(c.letters, boundary)
                                      : cap1_reexpress(ob.surface, c);
    return CurveWord{reduce_cyclic_letters(std::move(letters))};
  };

  for (const TwistFactor& f : ob.monodromy.factors) {
    CurveWord c = rewrite(f.curve);
    if (c.empty()) continue;  // twist curve bounds a disc after capping
    c = normalize(out.surface, c);
    out.monodromy.factors.push_back(TwistFactor{c, f.power});
  }

  // construction records survive when their data avoids the capped boundary
  for (const ConstructionRecord& r : ob.metadata.constructions) {
    if (boundary == 1) break;  // fan re-expression invalidates label history
    bool dead = r.boundary == boundary;
    for (int l : r.new_labels)
      if (l == boundary) dead = true;
    if (dead) continue;
    ConstructionRecord nr = r;
    nr.gamma = rewrite(r.gamma);
    if (nr.gamma.empty()) continue;
    nr.boundary = r.boundary > boundary ? r.boundary - 1 : r.boundary;
    for (int& l : nr.new_labels)
      if (l > boundary) --l;
    out.metadata.constructions.push_back(std::move(nr));
  }
  return out;
}

// ---------------------------------------------------------------------
// Construction: replace a boundary by m new ones

OpenBook build_construction(const OpenBook& ob, const ConstructionParams& p) {
  int b = ob.surface.boundary_count;
  if (p.m <= 1) throw invalid_argument("construction needs m >= 2");
  if (p.boundary < 1 || p.boundary > b)
    throw invalid_argument("unknown boundary label");
  if (static_cast<int>(p.exponents.size()) != p.m)
    throw invalid_argument("construction needs one exponent per new boundary");

  int beta = p.boundary;
  int m = p.m;
  OpenBook out;
  out.surface = make_surface(b + m - 1);

  // Old chords keep their order; the cluster of new boundaries takes the
  // contiguous label block replacing the old one.  When boundary 1 is
  // replaced the new outer boundary is B'_m and old chords shift up.
  auto map_chord = [&](int j) {
    if (beta == 1) return j + m - 1;
    return j > beta ? j + m - 1 : j;
  };
  auto rewrite = [&](const CurveWord& c) {
    std::vector<Letter> out_letters;
    for (const Letter& l : c.letters) {
      if (beta >= 2 && l.chord == beta) {
        // the cut chord to the old boundary becomes a cable of m chords
        if (l.dir > 0)
          for (int k = 0; k < m; ++k)
            out_letters.push_back(Letter{beta + k, l.dir});
        else
          for (int k = m - 1; k >= 0; --k)
            out_letters.push_back(Letter{beta + k, l.dir});
      } else {
        out_letters.push_back(Letter{map_chord(l.chord), l.dir});
      }
    }
    return CurveWord{std::move(out_letters)};
  };

  // B'_i labels: the block in index order, with B'_m taking the slot that
  // survives capping (label 1 when the outer boundary was replaced).
  std::vector<int> labels(m);
  if (beta == 1) {
    labels[m - 1] = 1;
    for (int i = 0; i < m - 1; ++i) labels[i] = i + 2;
  } else {
    for (int i = 0; i < m; ++i) labels[i] = beta + i;
  }

  std::vector<int> cluster;
  for (int i = 0; i < m; ++i) cluster.push_back(beta == 1 ? i + 1 : beta + i);
  CurveWord gamma = curve_from_partition(out.surface, cluster);

  for (const TwistFactor& f : ob.monodromy.factors) {
    CurveWord c = normalize(out.surface, rewrite(f.curve));
    if (c.empty()) throw internal_error("construction killed a twist curve");
    out.monodromy.factors.push_back(TwistFactor{c, f.power});
  }
  out.monodromy.factors.push_back(
      TwistFactor{gamma, -p.exponents[m - 1]});
  for (int i = 0; i < m; ++i) {
    if (p.exponents[i] == 0) continue;
    out.monodromy.factors.push_back(TwistFactor{
        boundary_parallel_curve(out.surface, labels[i]), p.exponents[i]});
  }

  for (const ConstructionRecord& r : ob.metadata.constructions) {
    ConstructionRecord nr = r;
    nr.gamma = normalize(out.surface, rewrite(r.gamma));
    auto map_label = [&](int l) {
      if (l == beta) return -1;
      if (beta == 1) return l + m - 1;
      return l > beta ? l + m - 1 : l;
    };
    nr.boundary = map_label(r.boundary);
    bool ok = nr.boundary != -1;
    for (int& l : nr.new_labels) {
      l = map_label(l);
      if (l == -1) ok = false;
    }
    if (ok && !nr.gamma.empty())
      out.metadata.constructions.push_back(std::move(nr));
  }
  ConstructionRecord rec;
  rec.boundary = beta;
  rec.m = m;
  rec.exponents = p.exponents;
  rec.gamma = gamma;
  rec.new_labels = labels;
  out.metadata.constructions.push_back(std::move(rec));
  return out;
}

OpenBook build_family(const FamilyParams& v) {
  OpenBook ob;
  ob.surface = make_surface(4);
  // alpha encircles boundaries 1 and 2, beta encircles 2 and 3; this is the
  // identification under which capping boundary 2 leaves the single
  // negative twist at boundary 1 and the arc counts below come out n_i - 1
  CurveWord alpha = curve_from_partition(ob.surface, {1, 2});
  CurveWord beta = curve_from_partition(ob.surface, {2, 3});
  std::vector<TwistFactor> factors;
  factors.push_back(TwistFactor{alpha, -v.n[0] - 1});
  factors.push_back(TwistFactor{beta, v.p});
  for (int i = 0; i < 4; ++i)
    factors.push_back(
        TwistFactor{boundary_parallel_curve(ob.surface, i + 1), v.n[i]});
  ob.monodromy = make_twist_word(ob.surface, std::move(factors));
  ob.metadata.family = v;
  ob.metadata.named_arcs.push_back({"gamma1", ArcWord{1, 2, {Letter{4, -1}}}});
  ob.metadata.named_arcs.push_back({"gamma2", ArcWord{4, 3, {Letter{2, 1}}}});
  ob.metadata.penner_positive = MultiCurve{{beta}};
  ob.metadata.penner_negative = MultiCurve{{alpha}};
  return ob;
}

}  // namespace openbook
