#include "openbook/classify.hpp"

#include <algorithm>
#include <set>

namespace openbook {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved:
      return "proved";
    case Verdict::Disproved:
      return "disproved";
    default:
      return "unknown";
  }
}

namespace {

std::string chain_str(const std::vector<int>& labels) {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += "B" + std::to_string(labels[i]);
  }
  return s + "]";
}

std::optional<CapOffWitness> check_chain(const OpenBook& src,
                                         const std::vector<int>& chain,
                                         int arc_depth) {
  OpenBook cur = src;
  for (int label : chain) {
    if (cur.surface.boundary_count < 2) return std::nullopt;
    if (label < 1 || label > cur.surface.boundary_count) return std::nullopt;
    try {
      cur = cap_off(cur, label);
    } catch (const invalid_argument&) {
      return std::nullopt;  // unsupported cap (boundary 1 on large pages)
    }
  }
  for (int bd = 1; bd <= cur.surface.boundary_count; ++bd) {
    if (auto arc = find_left_veering_arc(cur, bd, arc_depth)) {
      CapOffWitness w;
      w.capped_labels = chain;
      w.violating_arc = *arc;
      w.violating_boundary = bd;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CapOffWitness> cap_off_vanishing_search(
    const OpenBook& ob, const std::vector<std::vector<int>>& targets,
    int arc_depth, int subset_limit) {
  // hinted target sets first, capped in descending label order so the
  // labels of the original book stay valid while the chain runs
  for (const std::vector<int>& t : targets) {
    std::vector<int> chain = t;
    std::sort(chain.rbegin(), chain.rend());
    if (auto w = check_chain(ob, chain, arc_depth)) return w;
  }

  int b = ob.surface.boundary_count;
  std::vector<std::vector<int>> pool = {{}};
  for (int size = 1; size <= subset_limit && size < b; ++size) {
    // all label subsets of the given size, lexicographically
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    while (true) {
      pool.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == b - (size - 1 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (const std::vector<int>& subset : pool) {
    std::vector<int> chain = subset;
    std::sort(chain.rbegin(), chain.rend());
    if (auto w = check_chain(ob, chain, arc_depth)) return w;
  }
  return std::nullopt;
}

bool replay_cap_off_witness(const OpenBook& ob, const CapOffWitness& w) {
  OpenBook cur = ob;
  for (int label : w.capped_labels) {
    if (cur.surface.boundary_count < 2) return false;
    cur = cap_off(cur, label);
  }
  ArcWord img = apply(cur.surface, cur.monodromy, w.violating_arc);
  return veer_direction(cur.surface, w.violating_arc, img,
                        w.violating_boundary) < 0;
}

Certificate classify(const OpenBook& ob, const ClassifyOptions& opts) {
  const PlanarSurface& S = ob.surface;
  int b = S.boundary_count;
  Certificate cert;
  cert.config = opts;

  // per-boundary fractional Dehn twist evidence
  for (int bd = 1; bd <= b; ++bd) {
    BoundaryEvidence ev;
    ev.boundary = bd;
    ev.exact = fdtc_exact(ob, bd, opts.reducing_curves);
    bool positive_exact =
        ev.exact && Rational::of(0) < ev.exact->exact;
    if (!positive_exact) {
      // an exact positive coefficient already certifies right-veering at
      // this boundary; otherwise search for a violating arc
      ev.violation = find_left_veering_arc(ob, bd, opts.arc_depth);
      ev.right_veering_checked = !ev.violation.has_value();
    } else {
      ev.right_veering_checked = true;
    }
    if (!ev.violation) {
      try {
        ev.lower = fdtc_lower_bound(ob, bd);
      } catch (const invalid_argument&) {
        // the disc has no candidate arcs; leave the bound empty
      }
    }
    cert.fdtc.push_back(std::move(ev));
  }

  // (R6) a left-veering arc certifies overtwistedness
  for (const BoundaryEvidence& ev : cert.fdtc) {
    if (ev.violation) {
      cert.overtwisted.verdict = Verdict::Proved;
      cert.overtwisted.rule = "left-veering arc (Honda-Kazez-Matic)";
      cert.overtwisted.witness = "arc " + to_string(*ev.violation) +
                                 " veers left at B" +
                                 std::to_string(ev.boundary);
      cert.tight.verdict = Verdict::Disproved;
      cert.tight.rule = "overtwisted structures are not tight";
      cert.tight.witness = cert.overtwisted.witness;
      break;
    }
  }

  auto evidence_at_least = [&](const BoundaryEvidence& ev, std::int64_t n) {
    if (ev.exact && !(ev.exact->exact < Rational::of(n))) return true;
    return ev.lower && ev.right_veering_checked && ev.lower->lower >= n;
  };
  auto evidence_above = [&](const BoundaryEvidence& ev, std::int64_t n) {
    if (ev.exact && Rational::of(n) < ev.exact->exact) return true;
    return ev.lower && ev.right_veering_checked && ev.lower->lower >= n + 1;
  };

  // (R1) planar page and coefficient > 1 at every boundary gives tightness
  if (cert.tight.verdict == Verdict::Unknown) {
    bool all = b > 0;
    for (const BoundaryEvidence& ev : cert.fdtc)
      if (!evidence_above(ev, 1)) all = false;
    if (all) {
      cert.tight.verdict = Verdict::Proved;
      cert.tight.rule = "planar FDTC > 1 criterion (Ito-Kawamuro)";
      cert.tight.witness = "coefficient exceeds 1 at every boundary";
    }
  }

  // Penner certificate (hints, else family metadata)
  std::optional<MultiCurve> g1 = opts.gamma1, g2 = opts.gamma2;
  if (!g1 && ob.metadata.penner_positive) g1 = ob.metadata.penner_positive;
  if (!g2 && ob.metadata.penner_negative) g2 = ob.metadata.penner_negative;
  if (g1 && g2) cert.penner = penner_certificate(ob, *g1, *g2);
  bool pa = cert.penner && cert.penner->verdict;

  // (R2) pseudo-Anosov and coefficient >= 2 everywhere: universally tight
  if (pa) {
    bool all = b > 0;
    for (const BoundaryEvidence& ev : cert.fdtc)
      if (!evidence_at_least(ev, 2)) all = false;
    if (all) {
      cert.universally_tight.verdict = Verdict::Proved;
      cert.universally_tight.rule =
          "pseudo-Anosov with FDTC >= 2 (Colin-Honda, via Penner)";
      cert.universally_tight.witness =
          "Penner certificate plus coefficient >= 2 at every boundary";
      if (cert.tight.verdict == Verdict::Unknown) {
        cert.tight.verdict = Verdict::Proved;
        cert.tight.rule = "universally tight structures are tight";
        cert.tight.witness = cert.universally_tight.witness;
      }
    }
  }

  // (R3) pseudo-Anosov and coefficient > 4 everywhere: hyperbolic
  if (pa) {
    bool all = b > 0;
    for (const BoundaryEvidence& ev : cert.fdtc)
      if (!evidence_above(ev, 4)) all = false;
    if (all) {
      cert.hyperbolic.verdict = Verdict::Proved;
      cert.hyperbolic.rule =
          "pseudo-Anosov with FDTC > 4 forces hyperbolic (Ito-Kawamuro, "
          "via Penner)";
      cert.hyperbolic.witness =
          "Penner certificate plus coefficient > 4 at every boundary";
    }
  }

  // (R4) capping down to a verified overtwisted book kills the contact
  // invariant (Baldwin capping-off plus Ozsvath-Szabo vanishing).
  // Construction metadata supplies the chain that undoes the attachments.
  std::vector<std::vector<int>> targets = opts.cap_targets;
  {
    std::vector<int> undo;
    for (const ConstructionRecord& r : ob.metadata.constructions)
      for (std::size_t i = 0; i + 1 < r.new_labels.size(); ++i)
        undo.push_back(r.new_labels[i]);
    if (!undo.empty()) targets.push_back(undo);
  }
  cert.cap_witness = cap_off_vanishing_search(ob, targets, opts.arc_depth,
                                              opts.cap_subset_limit);
  if (cert.cap_witness) {
    cert.contact_invariant_zero.verdict = Verdict::Proved;
    cert.contact_invariant_zero.rule =
        "cap-off chain to an overtwisted book (Baldwin; Ozsvath-Szabo)";
    cert.contact_invariant_zero.witness =
        "cap " + chain_str(cert.cap_witness->capped_labels) +
        ", left-veering arc at B" +
        std::to_string(cert.cap_witness->violating_boundary);
  }

  // (R5) planar with vanishing invariant is not fillable in any sense
  if (cert.contact_invariant_zero.verdict == Verdict::Proved) {
    cert.fillable.verdict = Verdict::Disproved;
    cert.fillable.rule =
        "planar fillability equivalences (Niederkruger-Wendl) with "
        "nonvanishing invariant for Stein fillings (Ozsvath-Szabo)";
    cert.fillable.witness = cert.contact_invariant_zero.witness;
  }

  // overtwisted books have vanishing invariant
  if (cert.overtwisted.verdict == Verdict::Proved &&
      cert.contact_invariant_zero.verdict == Verdict::Unknown) {
    cert.contact_invariant_zero.verdict = Verdict::Proved;
    cert.contact_invariant_zero.rule =
        "overtwisted implies vanishing invariant (Ozsvath-Szabo)";
    cert.contact_invariant_zero.witness = cert.overtwisted.witness;
    cert.fillable.verdict = Verdict::Disproved;
    cert.fillable.rule = cert.contact_invariant_zero.rule;
    cert.fillable.witness = cert.contact_invariant_zero.witness;
  }

  // soundness: a property may not be both proved and disproved
  if (cert.tight.verdict == Verdict::Proved &&
      cert.overtwisted.verdict == Verdict::Proved)
    throw internal_error("certificate proves tight and overtwisted at once");

  return cert;
}

}  // namespace openbook
