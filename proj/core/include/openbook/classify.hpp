#ifndef OPENBOOK_CLASSIFY_HPP
#define OPENBOOK_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "openbook/invariants.hpp"
#include "openbook/mcg.hpp"

namespace openbook {

enum class Verdict { Proved, Disproved, Unknown };

std::string to_string(Verdict v);

// Chain of cap-offs ending in a verified left-veering arc.  Labels are the
// ones current at each step (caps renumber the later boundaries), so the
// chain replays deterministically from the source book.
struct CapOffWitness {
  std::vector<int> capped_labels;
  ArcWord violating_arc;
  int violating_boundary = 0;
};

struct PropertyReport {
  Verdict verdict = Verdict::Unknown;
  std::string rule;     // the theorem applied
  std::string witness;  // short human-readable witness summary
};

struct ClassifyOptions {
  std::optional<MultiCurve> gamma1;  // Penner candidates
  std::optional<MultiCurve> gamma2;
  std::vector<CurveWord> reducing_curves;
  std::vector<std::vector<int>> cap_targets;  // hinted cap-off label sets
  int arc_depth = 4;
  int cap_subset_limit = 3;
};

// Per-boundary fractional Dehn twist evidence gathered by classify.
struct BoundaryEvidence {
  int boundary = 0;
  std::optional<FdtcBound> exact;
  std::optional<FdtcBound> lower;
  bool right_veering_checked = false;  // no violation at the search depth
  std::optional<ArcWord> violation;
};

struct Certificate {
  PropertyReport tight;
  PropertyReport universally_tight;
  PropertyReport overtwisted;
  PropertyReport contact_invariant_zero;
  PropertyReport fillable;
  PropertyReport hyperbolic;

  std::vector<BoundaryEvidence> fdtc;
  std::optional<PennerCertificate> penner;
  std::optional<CapOffWitness> cap_witness;
  ClassifyOptions config;
};

// Applies each classification rule whose hypotheses are machine-verified;
// everything else stays unknown.  Sound, never complete.
Certificate classify(const OpenBook& ob, const ClassifyOptions& opts = {});

// Breadth-first search over cap-off chains (hinted targets first, then all
// subsets up to the limit, capped in descending label order) for a
// terminal book with a verified left-veering arc.
std::optional<CapOffWitness> cap_off_vanishing_search(
    const OpenBook& ob, const std::vector<std::vector<int>>& targets,
    int arc_depth, int subset_limit);

// Re-runs a witness from scratch: replays the cap-offs and re-verifies the
// terminal violation.
bool replay_cap_off_witness(const OpenBook& ob, const CapOffWitness& w);

}  // namespace openbook

#endif
