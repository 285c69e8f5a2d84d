#include "openbook/arrangement.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace openbook {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

// ---------------------------------------------------------------------
// ray walking
//
// Letter (j,+1) crosses chord j from its left side to its right side; the
// incoming strand ends on the left copy (copy 0) and the outgoing strand
// starts on the right copy (copy 1).  For (j,-1) the copies swap roles.

int in_slot(const PlanarSurface& S, const Letter& l) {
  return l.dir > 0 ? S.chord_copy_slot0[l.chord] : S.chord_copy_slot1[l.chord];
}
int out_slot(const PlanarSurface& S, const Letter& l) {
  return l.dir > 0 ? S.chord_copy_slot1[l.chord] : S.chord_copy_slot0[l.chord];
}

// A ray is a walk along an object away from one avatar of one crossing
// (or away from an arc endpoint).  t ranges over letter indices; t = -1
// stands at the from-endpoint of an arc and t = n at its to-endpoint.
struct Ray {
  int obj;
  int t;
  bool fwd;
};

struct StepResult {
  bool terminal = false;
  int slot = -1;  // landing slot (chord side, or marked vertex if terminal)
  Ray next{};     // valid when !terminal
};

StepResult step(const PlanarSurface& S, const std::vector<WalkObject>& objs,
                const Ray& r) {
  const WalkObject& o = objs[r.obj];
  int n = static_cast<int>(o.letters.size());
  StepResult res;
  if (r.fwd) {
    int nx = r.t + 1;
    if (o.is_arc && nx >= n) {
      res.terminal = true;
      res.slot = S.marked_slot[o.to];
      return res;
    }
    if (!o.is_arc) nx %= n;
    res.slot = in_slot(S, o.letters[nx]);
    res.next = Ray{r.obj, nx, true};
  } else {
    int pv = r.t - 1;
    if (o.is_arc && pv < 0) {
      res.terminal = true;
      res.slot = S.marked_slot[o.from];
      return res;
    }
    if (!o.is_arc) pv = (pv + n) % n;
    res.slot = out_slot(S, o.letters[pv]);
    res.next = Ray{r.obj, pv, false};
  }
  return res;
}

int mirror_slot(const PlanarSurface& S, int slot) {
  const auto& s = S.slots[slot];
  if (s.kind != PlanarSurface::SlotKind::ChordSide)
    throw internal_error("mirror of a non-chord slot");
  return s.copy == 0 ? S.chord_copy_slot1[s.chord] : S.chord_copy_slot0[s.chord];
}

// Compares two rays leaving a common slot.  Returns -1 when ray x attaches
// earlier along the slot's traversal, +1 when later, 0 when the rays never
// diverge (parallel).  Nesting rule: the ray whose itinerary first reaches
// the farther place (counterclockwise from the end of the current common
// slot) attaches earlier; while both rays land on the same chord side the
// comparison transfers unchanged to the continuation on the mirror copy.
int compare_rays(const PlanarSurface& S, const std::vector<WalkObject>& objs,
                 Ray rx, Ray ry, int start_slot) {
  int N = S.num_slots();
  int wc = start_slot;
  i64 cap = 0;
  cap += 2 * static_cast<i64>(objs[rx.obj].letters.size());
  cap += 2 * static_cast<i64>(objs[ry.obj].letters.size());
  cap += 16;
  for (i64 k = 0; k < cap; ++k) {
    StepResult a = step(S, objs, rx);
    StepResult b = step(S, objs, ry);
    if (a.slot != b.slot) {
      int ta = (a.slot - wc + N) % N;
      int tb = (b.slot - wc + N) % N;
      return ta > tb ? -1 : 1;
    }
    if (a.terminal && b.terminal) return 0;  // parallel to a shared endpoint
    wc = mirror_slot(S, a.slot);
    rx = a.next;
    ry = b.next;
  }
  throw internal_error("rays do not diverge (parallel or power input?)");
}

// stable mergesort with a three-way comparator
template <typename T, typename Cmp>
void merge_sort(std::vector<T>& v, Cmp cmp) {
  std::size_t n = v.size();
  if (n < 2) return;
  std::vector<T> buf(n);
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      std::size_t mid = std::min(lo + width, n);
      std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi)
        buf[k++] = (cmp(v[j], v[i]) < 0) ? v[j++] : v[i++];
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    }
    std::swap(v, buf);
  }
  // an even number of swaps leaves the result in v; fix up if needed
  // (the loop above always ends with the sorted data in v after the swap)
}

struct Fenwick {
  std::vector<i64> t;
  explicit Fenwick(std::size_t n) : t(n + 1, 0) {}
  void add(i64 i) {
    for (++i; i < static_cast<i64>(t.size()); i += i & -i) t[i] += 1;
  }
  i64 sum(i64 i) const {  // count of entries <= i
    i64 s = 0;
    for (++i; i > 0; i -= i & -i) s += t[i];
    return s;
  }
  i64 range(i64 lo, i64 hi) const {  // entries in (lo, hi) exclusive
    if (hi <= lo + 1) return 0;
    return sum(hi - 1) - sum(lo);
  }
};

}  // namespace

// ---------------------------------------------------------------------
// realization

Arrangement::Arrangement(const PlanarSurface& S, std::vector<WalkObject> objs,
                         bool exact_small)
    : S_(&S), objects_(std::move(objs)) {
  for (const WalkObject& o : objects_) {
    if (!o.is_arc && o.letters.empty())
      throw internal_error("cannot realize an empty closed word");
  }
  realize();
  if (exact_small) make_exact_small();
}

void Arrangement::realize() {
  const PlanarSurface& S = *S_;
  int b = S.boundary_count;
  int nobj = static_cast<int>(objects_.size());

  chord_order_.assign(b + 1, {});
  vertex_order_.assign(S.num_slots(), {});
  endpoint_rank_from_.assign(nobj, -1);
  endpoint_rank_to_.assign(nobj, -1);
  avatar_coord_.assign(nobj, {});
  from_coord_.assign(nobj, -1);
  to_coord_.assign(nobj, -1);
  corner_coord_.assign(S.num_slots(), -1);

  for (int i = 0; i < nobj; ++i)
    avatar_coord_[i].assign(objects_[i].letters.size(), {-1, -1});

  // collect crossings per chord and endpoint attachments per marked vertex
  std::vector<std::vector<ChordHit>> hits(b + 1);
  for (int i = 0; i < nobj; ++i)
    for (int t = 0; t < static_cast<int>(objects_[i].letters.size()); ++t)
      hits[objects_[i].letters[t].chord].push_back(ChordHit{i, t});

  std::vector<std::vector<std::pair<int, bool>>> attach(S.num_slots());
  for (int i = 0; i < nobj; ++i)
    if (objects_[i].is_arc) {
      attach[S.marked_slot[objects_[i].from]].push_back({i, true});
      attach[S.marked_slot[objects_[i].to]].push_back({i, false});
    }

  // Sort each chord's crossings by their position along the chord.
  //
  // Two crossings of the same chord start a corridor: the two walks run
  // through the polygon in lockstep while their strands stay parallel, and
  // the order at the first divergence propagates back unchanged.  The
  // canonical placement slides every crossing between two objects as far
  // forward (along the pair's first object) as its corridor allows, so
  // every pair is resolved from the corridor's backward end: both walks
  // step backward when the crossings point the same way, and the pair's
  // first member steps backward while the second steps forward when they
  // point opposite ways.  The resulting orders are realized by an actual
  // taut configuration, hence mutually consistent, and pairs whose two
  // corridor ends disagree contribute exactly one crossing at the forward
  // split.  Ties (both walks reaching a shared arc endpoint) resolve from
  // the corridor's other end, mirrored.
  for (int j = 2; j <= b; ++j) {
    int slot0 = S.chord_copy_slot0[j];
    int slot1 = S.chord_copy_slot1[j];
    // canonical-role comparison: `low` walks backward
    auto cmp_pair = [&](const ChordHit& low, const ChordHit& high) {
      int dlow = objects_[low.obj].letters[low.letter].dir;
      int dhigh = objects_[high.obj].letters[high.letter].dir;
      Ray rlow{low.obj, low.letter, false};
      Ray rhigh{high.obj, high.letter, dlow != dhigh};
      int wc = dlow > 0 ? slot0 : slot1;
      int r = compare_rays(S, objects_, rlow, rhigh, wc);
      if (r == 0) {
        // corridor ends at a shared arc endpoint: use the far end
        Ray slow{low.obj, low.letter, true};
        Ray shigh{high.obj, high.letter, dlow == dhigh};
        int wc2 = dlow > 0 ? slot1 : slot0;
        r = -compare_rays(S, objects_, slow, shigh, wc2);
      }
      // slot order on the left copy is chord order; on the right copy it
      // is reversed
      return dlow > 0 ? r : -r;
    };
    auto cmp = [&](const ChordHit& x, const ChordHit& y) {
      if (x.obj == y.obj && x.letter == y.letter) return 0;
      bool x_low = std::tie(x.obj, x.letter) < std::tie(y.obj, y.letter);
      return x_low ? cmp_pair(x, y) : -cmp_pair(y, x);
    };
    merge_sort(hits[j], cmp);
    chord_order_[j] = hits[j];
  }

  // order arc endpoints around each marked point
  std::vector<std::vector<int>> tie_group(S.num_slots());
  for (int v = 0; v < S.num_slots(); ++v) {
    if (attach[v].empty()) continue;
    auto ray_of = [&](const std::pair<int, bool>& a) {
      const WalkObject& o = objects_[a.first];
      return a.second ? Ray{a.first, -1, true}
                      : Ray{a.first, static_cast<int>(o.letters.size()), false};
    };
    auto cmp = [&](const std::pair<int, bool>& x,
                   const std::pair<int, bool>& y) {
      if (x == y) return 0;
      return compare_rays(S, objects_, ray_of(x), ray_of(y), v);
    };
    merge_sort(attach[v], cmp);
    vertex_order_[v] = attach[v];
    // shared ranks for parallel (never-diverging) attachments
    tie_group[v].assign(attach[v].size(), 0);
    for (std::size_t k = 1; k < attach[v].size(); ++k) {
      bool tied = cmp(attach[v][k - 1], attach[v][k]) == 0;
      tie_group[v][k] = tied ? tie_group[v][k - 1]
                             : static_cast<int>(k);
    }
    for (std::size_t k = 0; k < attach[v].size(); ++k) {
      auto [obj, at_from] = attach[v][k];
      if (at_from)
        endpoint_rank_from_[obj] = tie_group[v][k];
      else
        endpoint_rank_to_[obj] = tie_group[v][k];
    }
  }

  assign_coordinates();
}

void Arrangement::assign_coordinates() {
  const PlanarSurface& S = *S_;
  int nobj = static_cast<int>(objects_.size());
  // assign global circle coordinates in slot order
  coord_info_.clear();
  next_coord_ = 0;
  auto emit = [&](int slot, int obj, int letter, bool corner) {
    coord_info_.push_back(CoordInfo{slot, obj, letter, corner});
    return next_coord_++;
  };
  for (int slot = 0; slot < S.num_slots(); ++slot) {
    const auto& sl = S.slots[slot];
    switch (sl.kind) {
      case PlanarSurface::SlotKind::Vertex: {
        corner_coord_[slot] = emit(slot, -1, -1, true);
        for (auto [obj, at_from] : vertex_order_[slot]) {
          i64 c = emit(slot, obj, -1, false);
          if (at_from)
            from_coord_[obj] = c;
          else
            to_coord_[obj] = c;
        }
        break;
      }
      case PlanarSurface::SlotKind::BoundarySeg:
        break;
      case PlanarSurface::SlotKind::ChordSide: {
        const auto& order = chord_order_[sl.chord];
        if (sl.copy == 0) {
          for (const ChordHit& h : order)
            avatar_coord_[h.obj][h.letter][0] = emit(slot, h.obj, h.letter, false);
        } else {
          for (auto it = order.rbegin(); it != order.rend(); ++it)
            avatar_coord_[it->obj][it->letter][1] =
                emit(slot, it->obj, it->letter, false);
        }
        break;
      }
    }
  }

  // strand extraction
  strands_.assign(nobj, {});
  for (int i = 0; i < nobj; ++i) {
    const WalkObject& o = objects_[i];
    int n = static_cast<int>(o.letters.size());
    auto out_coord = [&](int t) {
      return avatar_coord_[i][t][o.letters[t].dir > 0 ? 1 : 0];
    };
    auto in_coord = [&](int t) {
      return avatar_coord_[i][t][o.letters[t].dir > 0 ? 0 : 1];
    };
    if (o.is_arc) {
      if (n == 0) {
        strands_[i].push_back(Strand{from_coord_[i], to_coord_[i]});
      } else {
        strands_[i].push_back(Strand{from_coord_[i], in_coord(0)});
        for (int t = 1; t < n; ++t)
          strands_[i].push_back(Strand{out_coord(t - 1), in_coord(t)});
        strands_[i].push_back(Strand{out_coord(n - 1), to_coord_[i]});
      }
    } else {
      for (int t = 0; t < n; ++t)
        strands_[i].push_back(Strand{out_coord(t), in_coord((t + 1) % n)});
    }
  }
}

// Re-searches the chord interleavings until every pair of objects is drawn
// with its minimal crossing number (object-internal orders stay fixed).
// Only for small inputs: the face tracer needs a genuinely minimal picture.
void Arrangement::make_exact_small() {
  const PlanarSurface& S = *S_;
  int nobj = static_cast<int>(objects_.size());

  std::vector<std::vector<std::int64_t>> want(nobj,
                                              std::vector<std::int64_t>(nobj));
  for (int i = 0; i < nobj; ++i)
    for (int j = i + 1; j < nobj; ++j)
      want[i][j] = taut_intersection(S, objects_[i], objects_[j]);

  auto tight = [&]() {
    for (int i = 0; i < nobj; ++i) {
      if (self_crossings(i) != 0) return false;
      for (int j = i + 1; j < nobj; ++j)
        if (crossings_between(i, j) != want[i][j]) return false;
    }
    return true;
  };
  if (tight()) return;

  // enumerate merges per chord, keeping each object's forced suborder
  int b = S.boundary_count;
  std::vector<std::vector<std::vector<ChordHit>>> by_obj(b + 1);
  std::vector<std::vector<int>> tags(b + 1);
  double budget = 1;
  for (int c = 2; c <= b; ++c) {
    by_obj[c].assign(nobj, {});
    for (const ChordHit& h : chord_order_[c]) by_obj[c][h.obj].push_back(h);
    for (int o = 0; o < nobj; ++o)
      tags[c].insert(tags[c].end(), by_obj[c][o].size(), o);
    std::sort(tags[c].begin(), tags[c].end());
    // multinomial size estimate
    double ways = 1, k = 1;
    std::vector<double> cnt(nobj, 0);
    for (std::size_t t = 0; t < tags[c].size(); ++t) {
      ways *= static_cast<double>(t + 1);
      k *= ++cnt[tags[c][t]];
    }
    budget *= ways / k;
    if (budget > 3e6)
      throw internal_error("minimal placement search space too large");
  }

  std::function<bool(int)> rec = [&](int c) -> bool {
    if (c > b) {
      assign_coordinates();
      return tight();
    }
    if (tags[c].empty()) return rec(c + 1);
    std::sort(tags[c].begin(), tags[c].end());
    do {
      std::vector<int> pos(nobj, 0);
      auto& order = chord_order_[c];
      order.clear();
      for (int t : tags[c]) order.push_back(by_obj[c][t][pos[t]++]);
      if (rec(c + 1)) return true;
    } while (std::next_permutation(tags[c].begin(), tags[c].end()));
    return false;
  };
  if (!rec(2))
    throw internal_error("no placement achieves the minimal crossing counts");
}

const std::vector<Arrangement::ChordHit>& Arrangement::chord_order(
    int chord) const {
  return chord_order_[chord];
}

std::int64_t Arrangement::corner_coord(int slot) const {
  return corner_coord_[slot];
}

std::int64_t Arrangement::avatar_coord(int obj, int letter, int copy) const {
  return avatar_coord_[obj][letter][copy];
}

int Arrangement::endpoint_rank(int obj, bool at_from) const {
  return at_from ? endpoint_rank_from_[obj] : endpoint_rank_to_[obj];
}

namespace {

i64 count_cross_pairs(const std::vector<std::pair<Arrangement::Strand, int>>& st,
                      i64 ncoords, bool between_groups) {
  struct Item {
    i64 lo, hi;
    int tag;
  };
  std::vector<Item> items;
  items.reserve(st.size());
  for (const auto& [s, tag] : st)
    items.push_back(Item{std::min(s.a, s.b), std::max(s.a, s.b), tag});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.lo < b.lo; });
  Fenwick f0(ncoords), f1(ncoords);
  i64 total = 0;
  for (const Item& it : items) {
    if (between_groups) {
      const Fenwick& other = it.tag == 0 ? f1 : f0;
      total += other.range(it.lo, it.hi);
    } else {
      total += f0.range(it.lo, it.hi);
    }
    (it.tag == 0 ? f0 : f1).add(it.hi);
  }
  return total;
}

}  // namespace

std::int64_t Arrangement::crossings_between(int objA, int objB) const {
  std::vector<std::pair<Strand, int>> st;
  for (const Strand& s : strands_[objA]) st.push_back({s, 0});
  for (const Strand& s : strands_[objB]) st.push_back({s, 1});
  return count_cross_pairs(st, next_coord_, true);
}

std::int64_t Arrangement::self_crossings(int obj) const {
  std::vector<std::pair<Strand, int>> st;
  for (const Strand& s : strands_[obj]) st.push_back({s, 0});
  return count_cross_pairs(st, next_coord_, false);
}

// ---------------------------------------------------------------------
// taut intersection counting
//
// Crossings of two reduced embedded words decompose into two kinds.  A
// strand pair whose four endpoint slots are pairwise distinct crosses
// exactly when the slots interleave around the polygon, whatever the
// placement.  All remaining crossings live inside corridors: maximal runs
// where the two walks traverse the same polygon faces, in parallel or
// antiparallel.  A corridor confines the pair to a strip; the strip's two
// ends are resolved by the nesting rule (or declared neutral when they
// close onto a shared arc endpoint or fold onto the same walk), and the
// runs cross exactly once iff the two resolutions disagree.

namespace {

struct WalkView {
  const PlanarSurface* S;
  const WalkObject* o;
  int n;

  static WalkView of(const PlanarSurface& S, const WalkObject& o) {
    return WalkView{&S, &o, static_cast<int>(o.letters.size())};
  }
  bool arc() const { return o->is_arc; }
  int dir(int t) const { return o->letters[t].dir; }
  int inslot(int t) const { return in_slot(*S, o->letters[t]); }
  int outslot(int t) const { return out_slot(*S, o->letters[t]); }
  int prev(int t) const { return t > 0 ? t - 1 : (arc() ? -1 : n - 1); }
  int next(int t) const { return t + 1 < n ? t + 1 : (arc() ? -1 : 0); }
  // far slot of the strand arriving at letter t / leaving letter t
  int far_back(int t) const {
    int p = prev(t);
    return p < 0 ? S->marked_slot[o->from] : outslot(p);
  }
  int far_next(int t) const {
    int nx = next(t);
    return nx < 0 ? S->marked_slot[o->to] : inslot(nx);
  }
  // strand endpoint slots, walk order; strand t runs toward letter t for
  // arcs and away from letter t for curves
  std::vector<std::pair<int, int>> strand_slots() const {
    std::vector<std::pair<int, int>> out;
    if (arc()) {
      int from_slot = S->marked_slot[o->from];
      int to_slot = S->marked_slot[o->to];
      if (n == 0) {
        out.push_back({from_slot, to_slot});
      } else {
        out.push_back({from_slot, inslot(0)});
        for (int t = 1; t < n; ++t) out.push_back({outslot(t - 1), inslot(t)});
        out.push_back({outslot(n - 1), to_slot});
      }
    } else {
      for (int t = 0; t < n; ++t)
        out.push_back({outslot(t), inslot((t + 1) % n)});
    }
    return out;
  }
};

bool slots_interleave(int a1, int b1, int a2, int b2, int nslots) {
  auto within = [&](int x, int lo, int hi) {
    // x strictly inside the arc from lo forward to hi
    int dx = (x - lo + nslots) % nslots;
    int dh = (hi - lo + nslots) % nslots;
    return 0 < dx && dx < dh;
  };
  return within(a2, a1, b1) != within(b2, a1, b1);
}

// forced crossings between strand pairs with four distinct slots
i64 face_term(const std::vector<std::pair<int, int>>& sa,
              const std::vector<std::pair<int, int>>& sb, bool self,
              int nslots) {
  std::map<std::pair<int, int>, i64> ba, bb;
  for (auto [x, y] : sa) ba[std::minmax(x, y)] += 1;
  for (auto [x, y] : sb) bb[std::minmax(x, y)] += 1;
  i64 total = 0;
  for (const auto& [p1, c1] : ba)
    for (const auto& [p2, c2] : bb) {
      if (self && p2 < p1) continue;  // unordered bucket pairs once
      if (self && p1 == p2) continue;
      if (p1.first == p2.first || p1.first == p2.second ||
          p1.second == p2.first || p1.second == p2.second)
        continue;
      if (slots_interleave(p1.first, p1.second, p2.first, p2.second, nslots))
        total += c1 * c2;
    }
  return total;
}

// crossings carried by corridors of co-chordal pairs
i64 corridor_term(const PlanarSurface& S, const WalkView& A, const WalkView& B,
                  bool self) {
  int nslots = S.num_slots();
  auto th = [&](int w, int f) { return (f - w + nslots) % nslots; };

  std::vector<std::vector<int>> hitsA(S.boundary_count + 1),
      hitsB(S.boundary_count + 1);
  for (int t = 0; t < A.n; ++t) hitsA[A.o->letters[t].chord].push_back(t);
  for (int t = 0; t < B.n; ++t) hitsB[B.o->letters[t].chord].push_back(t);

  std::set<std::pair<int, int>> visited;
  auto mark = [&](int i, int j) {
    visited.insert({i, j});
    if (self) visited.insert({j, i});
  };

  i64 total = 0;
  for (int c = 2; c <= S.boundary_count; ++c) {
    for (int i : hitsA[c])
      for (int j : hitsB[c]) {
        if (self && i == j) continue;
        if (visited.count({i, j})) continue;
        bool anti = A.dir(i) != B.dir(j);

        // walk to the corridor's backward end
        int ci = i, cj = j;
        bool closed = false, fold_back = false;
        i64 guard = static_cast<i64>(A.n) * std::max(B.n, 1) + 8;
        while (true) {
          int pi = A.prev(ci);
          int pj = anti ? B.next(cj) : B.prev(cj);
          if (pi < 0 || pj < 0) break;  // arc endpoint stops the corridor
          int farA = A.outslot(pi);
          int farB = anti ? B.inslot(pj) : B.outslot(pj);
          if (farA != farB) break;
          if (self && (pi == pj || (pi == cj && pj == ci))) {
            fold_back = true;
            break;
          }
          ci = pi;
          cj = pj;
          if (ci == i && cj == j) {
            closed = true;  // the two walks are parallel everywhere
            break;
          }
          if (--guard < 0) throw internal_error("corridor walk diverged");
        }

        // backward end resolution
        bool back_neutral = fold_back || closed;
        bool t_back = false;
        if (!back_neutral) {
          int fA = A.far_back(ci);
          int fB = anti ? B.far_next(cj) : B.far_back(cj);
          if (fA == fB) {
            back_neutral = true;  // both walks end at a shared marked point
          } else {
            int w = A.inslot(ci);
            bool a_first_slot = th(w, fA) > th(w, fB);
            t_back = A.dir(ci) > 0 ? a_first_slot : !a_first_slot;
          }
        }

        // walk forward, marking pairs and counting direction flips
        mark(ci, cj);
        int flips = 0;
        bool fold_front = false;
        while (!closed) {
          int ni = A.next(ci);
          int nj = anti ? B.prev(cj) : B.next(cj);
          if (ni < 0 || nj < 0) break;
          int farA = A.inslot(ni);
          int farB = anti ? B.outslot(nj) : B.inslot(nj);
          if (farA != farB) break;
          if (self && (ni == nj || (ni == cj && nj == ci))) {
            fold_front = true;
            break;
          }
          flips += A.dir(ci) != A.dir(ni) ? 1 : 0;
          ci = ni;
          cj = nj;
          mark(ci, cj);
          if (--guard < 0) throw internal_error("corridor walk diverged");
        }
        if (closed) continue;  // parallel all the way round: no crossings

        // forward end resolution
        bool front_neutral = fold_front;
        bool t_front = false;
        if (!front_neutral) {
          int fA = A.far_next(ci);
          int fB = anti ? B.far_back(cj) : B.far_next(cj);
          if (fA == fB) {
            front_neutral = true;
          } else {
            int w = A.outslot(ci);
            bool a_first_slot = th(w, fA) > th(w, fB);
            t_front = A.dir(ci) > 0 ? !a_first_slot : a_first_slot;
          }
        }

        if (back_neutral || front_neutral) continue;
        bool propagated = (flips % 2) ? !t_back : t_back;
        if (propagated != t_front) total += 1;
      }
  }
  return total;
}

}  // namespace

std::int64_t taut_intersection(const PlanarSurface& S, const WalkObject& a,
                               const WalkObject& b) {
  WalkView A = WalkView::of(S, a), B = WalkView::of(S, b);
  return face_term(A.strand_slots(), B.strand_slots(), false, S.num_slots()) +
         corridor_term(S, A, B, false);
}

std::int64_t taut_self_intersection(const PlanarSurface& S,
                                    const WalkObject& a) {
  WalkView A = WalkView::of(S, a);
  auto ss = A.strand_slots();
  return face_term(ss, ss, true, S.num_slots()) + corridor_term(S, A, A, true);
}

// ---------------------------------------------------------------------
// exact geometry on convex-position coordinates
//
// Coordinate k is drawn at the point (k, k^2).  The points are in convex
// position with cyclic order equal to coordinate order, so straight chords
// cross exactly when their coordinate pairs interleave, and every local
// question about a crossing reduces to small integer arithmetic.

namespace {

struct ChordLine {
  i64 s;  // x1 + x2
  i64 t;  // x1 * x2   (line through the two points: y = s*x - t)
};

ChordLine line_of(i64 a, i64 b) { return ChordLine{a + b, a * b}; }

bool interleaves(i64 a1, i64 b1, i64 a2, i64 b2) {
  i64 lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
  i64 lo2 = std::min(a2, b2), hi2 = std::max(a2, b2);
  return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
         (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

// sign of sigma = y - (s*x - t) for the parabola point (p, p^2):
// positive when the point lies above the chord's line
int side_of(const ChordLine& L, i64 p) {
  i128 v = static_cast<i128>(p) * p - static_cast<i128>(L.s) * p + L.t;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// compare intersection abscissae of chords u^v1 and u^v2 along increasing x
// x*(u,v) = (t_u - t_v) / (s_u - s_v)
int cmp_intersection_x(const ChordLine& u, const ChordLine& v1,
                       const ChordLine& v2) {
  i128 n1 = static_cast<i128>(u.t) - v1.t;
  i128 d1 = static_cast<i128>(u.s) - v1.s;
  i128 n2 = static_cast<i128>(u.t) - v2.t;
  i128 d2 = static_cast<i128>(u.s) - v2.s;
  if (d1 < 0) {
    n1 = -n1;
    d1 = -d1;
  }
  if (d2 < 0) {
    n2 = -n2;
    d2 = -d2;
  }
  i128 lhs = n1 * d2, rhs = n2 * d1;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

std::vector<Arrangement::WalkCrossing> Arrangement::crossings_along(
    int x, const std::vector<int>& ys) const {
  std::vector<WalkCrossing> out;
  const auto& xs = strands_[x];
  for (int sx = 0; sx < static_cast<int>(xs.size()); ++sx) {
    const Strand& u = xs[sx];
    ChordLine lu = line_of(u.a, u.b);
    struct Hit {
      WalkCrossing wc;
      ChordLine lv;
    };
    std::vector<Hit> here;
    for (int y : ys) {
      const auto& yst = strands_[y];
      for (int sy = 0; sy < static_cast<int>(yst.size()); ++sy) {
        const Strand& v = yst[sy];
        if (!interleaves(u.a, u.b, v.a, v.b)) continue;
        ChordLine lv = line_of(v.a, v.b);
        // the partner starts on x's left iff its tail is above the line
        // and x walks toward increasing coordinates (or both reversed)
        int tail_side = side_of(lu, v.a);
        bool x_increasing = u.a < u.b;
        bool tail_left = (tail_side > 0) == x_increasing;
        here.push_back(
            Hit{WalkCrossing{sx, y, sy, tail_left ? 1 : -1}, lv});
      }
    }
    std::sort(here.begin(), here.end(), [&](const Hit& h1, const Hit& h2) {
      int c = cmp_intersection_x(lu, h1.lv, h2.lv);
      if (c == 0)
        throw internal_error("concurrent crossings along a strand");
      return u.a < u.b ? c < 0 : c > 0;
    });
    for (const Hit& h : here) out.push_back(h.wc);
  }
  return out;
}

// ---------------------------------------------------------------------
// complementary regions (face tracing with chord sides glued back)

namespace {

struct Pt {
  i64 xn, yn, d;  // (xn/d, yn/d), d > 0
  friend bool operator==(const Pt&, const Pt&) = default;
  friend auto operator<=>(const Pt&, const Pt&) = default;
};

Pt pt_of_coord(i64 k) { return Pt{k, k * k, 1}; }

// intersection of two parabola chords
Pt chord_intersection(const ChordLine& a, const ChordLine& b) {
  i64 d = a.s - b.s;
  i64 xn = a.t - b.t;
  // y = s*x - t evaluated at x = xn/d
  i128 yn = static_cast<i128>(a.s) * xn - static_cast<i128>(a.t) * d;
  if (d < 0) {
    d = -d;
    xn = -xn;
    yn = -yn;
  }
  return Pt{xn, static_cast<i64>(yn), d};
}

// exact direction comparison for the rotation system: angles in [0, 2pi)
struct Dir {
  i128 dx, dy;
};

int half_of(const Dir& v) {
  if (v.dy > 0 || (v.dy == 0 && v.dx > 0)) return 0;
  return 1;
}

bool dir_less(const Dir& a, const Dir& b) {
  int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  i128 cr = a.dx * b.dy - a.dy * b.dx;
  if (cr != 0) return cr > 0;
  return false;
}

Dir direction(const Pt& from, const Pt& to) {
  // (to - from) with positive common denominator
  i128 dx = static_cast<i128>(to.xn) * from.d - static_cast<i128>(from.xn) * to.d;
  i128 dy = static_cast<i128>(to.yn) * from.d - static_cast<i128>(from.yn) * to.d;
  return Dir{dx, dy};
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<Region> complementary_regions(
    const PlanarSurface& S, const std::vector<WalkObject>& objs) {
  Arrangement arr(S, objs, /*exact_small=*/true);
  if (arr.total_coords() > 20000)
    throw internal_error("region tracing is for small arrangements");

  // Boundary coordinates, with a sentinel point inside every side slot so
  // that each boundary edge lies in a single well-defined slot.
  struct BCoord {
    i64 coord;     // position key (2k for real coords, 2k+1 for sentinels)
    int slot;
    bool corner;
  };
  std::vector<BCoord> bc;
  {
    const auto& info = arr.coords();
    std::size_t next = 0;
    for (int slot = 0; slot < S.num_slots(); ++slot) {
      bool side = S.slots[slot].kind != PlanarSurface::SlotKind::Vertex;
      bool any = false;
      while (next < info.size() && info[next].slot == slot) {
        bc.push_back(BCoord{2 * static_cast<i64>(next), slot,
                            info[next].is_corner});
        any = true;
        ++next;
      }
      if (side && !any)
        bc.push_back(BCoord{2 * static_cast<i64>(next) - 1, slot, false});
    }
  }

  // vertex ids keyed by exact point
  std::map<Pt, int> vid;
  auto vertex_id = [&](const Pt& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(vid.size());
    vid.emplace(p, id);
    return id;
  };
  auto pt_of_b = [&](const BCoord& c) {
    // sentinels sit between integer coordinates; spread everything by 2
    return Pt{c.coord, c.coord * c.coord, 1};
  };

  // edges
  struct Edge {
    int v1, v2;
    Pt p1, p2;
    int kind;      // 0 = strand, 1 = boundary piece, 2 = chord piece
    int boundary;  // for kind 1
    int chord, copy, piece;  // for kind 2
  };
  std::vector<Edge> edges;

  // boundary cycle edges
  int nb = static_cast<int>(bc.size());
  for (int i = 0; i < nb; ++i) {
    const BCoord& c1 = bc[i];
    const BCoord& c2 = bc[(i + 1) % nb];
    // the slot of the piece between c1 and c2
    int slot = -1;
    if (!c1.corner && S.slots[c1.slot].kind != PlanarSurface::SlotKind::Vertex)
      slot = c1.slot;
    else if (!c2.corner &&
             S.slots[c2.slot].kind != PlanarSurface::SlotKind::Vertex)
      slot = c2.slot;
    else if (c1.slot == c2.slot)
      slot = c1.slot;  // attachments within a vertex slot
    else {
      // between a vertex slot and the next: the side slot in between
      for (int s = (c1.slot + 1) % S.num_slots(); ; s = (s + 1) % S.num_slots()) {
        if (S.slots[s].kind != PlanarSurface::SlotKind::Vertex) {
          slot = s;
          break;
        }
        if (s == c2.slot) { slot = c2.slot; break; }
      }
    }
    Edge e;
    e.p1 = pt_of_b(c1);
    e.p2 = pt_of_b(c2);
    e.v1 = vertex_id(e.p1);
    e.v2 = vertex_id(e.p2);
    const auto& sl = S.slots[slot];
    if (sl.kind == PlanarSurface::SlotKind::ChordSide) {
      e.kind = 2;
      e.chord = sl.chord;
      e.copy = sl.copy;
      e.piece = -1;  // filled below
    } else {
      e.kind = 1;
      e.boundary = sl.kind == PlanarSurface::SlotKind::BoundarySeg
                       ? sl.boundary
                       : S.slots[slot].boundary;
    }
    e.chord = sl.kind == PlanarSurface::SlotKind::ChordSide ? sl.chord : 0;
    e.copy = sl.kind == PlanarSurface::SlotKind::ChordSide ? sl.copy : -1;
    edges.push_back(e);
  }
  // number chord pieces along each copy in boundary order
  {
    std::vector<int> counter0(S.boundary_count + 1, 0);
    std::vector<int> counter1(S.boundary_count + 1, 0);
    for (Edge& e : edges) {
      if (e.kind != 2) continue;
      if (e.copy == 0)
        e.piece = counter0[e.chord]++;
      else
        e.piece = counter1[e.chord]++;
    }
    for (int j = 2; j <= S.boundary_count; ++j)
      if (counter0[j] != counter1[j])
        throw internal_error("chord copies disagree on piece count");
  }

  // strand edges, subdivided at pairwise crossings
  int nobj = static_cast<int>(objs.size());
  struct RawStrand {
    Pt a, b;
    ChordLine line;
    std::vector<Pt> cuts;
  };
  std::vector<RawStrand> raw;
  for (int i = 0; i < nobj; ++i)
    for (const auto& s : arr.strands_of(i)) {
      RawStrand r;
      r.a = pt_of_coord(2 * s.a);
      r.b = pt_of_coord(2 * s.b);
      r.line = line_of(2 * s.a, 2 * s.b);
      raw.push_back(r);
    }
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!interleaves(raw[i].a.xn, raw[i].b.xn, raw[j].a.xn, raw[j].b.xn))
        continue;
      Pt p = chord_intersection(raw[i].line, raw[j].line);
      raw[i].cuts.push_back(p);
      raw[j].cuts.push_back(p);
    }
  auto x_less = [](const Pt& p, const Pt& q) {
    return static_cast<i128>(p.xn) * q.d < static_cast<i128>(q.xn) * p.d;
  };
  for (RawStrand& r : raw) {
    std::sort(r.cuts.begin(), r.cuts.end(), [&](const Pt& p, const Pt& q) {
      if (p == q) return false;
      return x_less(p, q);
    });
    r.cuts.erase(std::unique(r.cuts.begin(), r.cuts.end()), r.cuts.end());
    if (x_less(r.b, r.a)) std::reverse(r.cuts.begin(), r.cuts.end());
    Pt prev = r.a;
    for (const Pt& c : r.cuts) {
      edges.push_back(Edge{vertex_id(prev), vertex_id(c), prev, c, 0, 0, 0, -1, -1});
      prev = c;
    }
    edges.push_back(Edge{vertex_id(prev), vertex_id(r.b), prev, r.b, 0, 0, 0, -1, -1});
  }

  // rotation system
  int nv = static_cast<int>(vid.size());
  int ne = static_cast<int>(edges.size());
  std::vector<Pt> vpt(nv);
  for (const auto& [p, id] : vid) vpt[id] = p;
  // half-edge h = 2*e + side; side 0 runs v1->v2
  auto tail = [&](int h) { return h & 1 ? edges[h >> 1].v2 : edges[h >> 1].v1; };
  auto head = [&](int h) { return h & 1 ? edges[h >> 1].v1 : edges[h >> 1].v2; };
  std::vector<std::vector<int>> out_half(nv);
  for (int e = 0; e < ne; ++e) {
    out_half[edges[e].v1].push_back(2 * e);
    out_half[edges[e].v2].push_back(2 * e + 1);
  }
  for (int v = 0; v < nv; ++v) {
    std::sort(out_half[v].begin(), out_half[v].end(), [&](int h1, int h2) {
      Dir d1 = direction(vpt[v], vpt[head(h1)]);
      Dir d2 = direction(vpt[v], vpt[head(h2)]);
      if (dir_less(d1, d2)) return true;
      if (dir_less(d2, d1)) return false;
      return h1 < h2;
    });
  }
  std::vector<int> pos_at_tail(2 * ne);
  for (int v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < out_half[v].size(); ++k)
      pos_at_tail[out_half[v][k]] = static_cast<int>(k);

  // faces: next half-edge = clockwise-next outgoing edge after the twin
  std::vector<int> face_of(2 * ne, -1);
  std::vector<std::vector<int>> face_halves;
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (face_of[h0] != -1) continue;
    int f = static_cast<int>(face_halves.size());
    face_halves.push_back({});
    int h = h0;
    do {
      face_of[h] = f;
      face_halves[f].push_back(h);
      int tw = h ^ 1;
      int v = tail(tw);
      const auto& ring = out_half[v];
      int k = pos_at_tail[tw];
      int next = ring[(k - 1 + static_cast<int>(ring.size())) %
                      static_cast<int>(ring.size())];
      h = next;
    } while (h != h0);
  }

  // the outer face is the one seen from the reversed hull edges; the first
  // boundary-cycle edge traversed backward borders it
  int outer = face_of[1];

  // glue chord pieces: identify faces across matching copy-0/copy-1 pieces
  int nf = static_cast<int>(face_halves.size());
  DSU face_dsu(nf);
  // locate chord-piece edges
  std::vector<std::vector<int>> c0(S.boundary_count + 1), c1(S.boundary_count + 1);
  for (int e = 0; e < ne; ++e) {
    if (edges[e].kind != 2) continue;
    auto& v = edges[e].copy == 0 ? c0[edges[e].chord] : c1[edges[e].chord];
    if (static_cast<int>(v.size()) <= edges[e].piece) v.resize(edges[e].piece + 1);
    v[edges[e].piece] = e;
  }
  struct Glue {
    int e0, e1;
  };
  std::vector<Glue> glues;
  for (int j = 2; j <= S.boundary_count; ++j) {
    int m = static_cast<int>(c0[j].size());
    for (int i = 0; i < m; ++i) {
      int e0 = c0[j][i];
      int e1 = c1[j][m - 1 - i];
      glues.push_back(Glue{e0, e1});
      // interior faces on each side of the glued edge become one region;
      // the polygon interior is to the left of the boundary cycle, i.e. on
      // the side of half-edge 2*e (which runs along the cycle direction)
      int f0 = face_of[2 * e0] == outer ? face_of[2 * e0 + 1] : face_of[2 * e0];
      int f1 = face_of[2 * e1] == outer ? face_of[2 * e1 + 1] : face_of[2 * e1];
      face_dsu.unite(f0, f1);
    }
  }

  // vertex identifications induced by the gluing: endpoints of matched
  // pieces coincide in the surface
  DSU vert_dsu(nv);
  for (const Glue& g : glues) {
    const Edge& a = edges[g.e0];
    const Edge& b = edges[g.e1];
    // copy 0 ascends the chord while copy 1 descends: first with last
    vert_dsu.unite(a.v1, b.v2);
    vert_dsu.unite(a.v2, b.v1);
  }

  // edge identifications: glued pairs count once
  std::vector<int> edge_class(ne);
  for (int e = 0; e < ne; ++e) edge_class[e] = e;
  for (const Glue& g : glues) edge_class[g.e1] = g.e0;

  // gather regions
  std::map<int, Region> regions;
  std::map<int, std::vector<char>> edge_seen, vert_seen, bnd_seen;
  for (int f = 0; f < nf; ++f) {
    if (f == outer) continue;
    int r = face_dsu.find(f);
    auto& reg = regions[r];
    reg.faces += 1;
    auto& es = edge_seen[r];
    auto& vs = vert_seen[r];
    auto& bs = bnd_seen[r];
    es.resize(ne, 0);
    vs.resize(nv, 0);
    bs.resize(S.boundary_count + 1, 0);
    for (int h : face_halves[f]) {
      int e = h >> 1;
      es[edge_class[e]] = 1;
      vs[vert_dsu.find(edges[e].v1)] = 1;
      vs[vert_dsu.find(edges[e].v2)] = 1;
      if (edges[e].kind == 1) bs[edges[e].boundary] = 1;
    }
  }
  std::vector<Region> out;
  for (auto& [r, reg] : regions) {
    i64 V = 0, E = 0;
    for (char c : vert_seen[r]) V += c;
    for (char c : edge_seen[r]) E += c;
    reg.chi = static_cast<int>(V - E + reg.faces);
    for (int i = 1; i <= S.boundary_count; ++i)
      if (bnd_seen[r][i]) reg.boundaries.push_back(i);
    out.push_back(reg);
  }

  // whole-surface bookkeeping must balance
  {
    int total = 0;
    std::vector<char> ve(nv, 0), ee(ne, 0);
    i64 V = 0, E = 0, F = 0;
    for (int f = 0; f < nf; ++f)
      if (f != outer) F += 1;
    for (int e = 0; e < ne; ++e)
      if (!ee[edge_class[e]]) {
        ee[edge_class[e]] = 1;
        E += 1;
      }
    for (int v = 0; v < nv; ++v)
      if (!ve[vert_dsu.find(v)]) {
        ve[vert_dsu.find(v)] = 1;
        V += 1;
      }
    total = static_cast<int>(V - E + F);
    if (total != 2 - S.boundary_count)
      throw internal_error("Euler bookkeeping failed: chi = " +
                           std::to_string(total) + " expected " +
                           std::to_string(2 - S.boundary_count));
  }
  return out;
}

}  // namespace openbook
