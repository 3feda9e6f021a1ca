#pragma once

#include <string>
#include <vector>

#include "smlab/proof/checkpoint.hpp"

namespace smlab::proof {

struct ProofReport {
  int theorem = 0;
  std::string title;
  std::vector<Checkpoint> checkpoints;
  bool passed = false;
  double wall_time_s = 0.0;

  void add(Checkpoint cp) { checkpoints.push_back(std::move(cp)); }
  // overall pass iff every checkpoint passes
  void finalize(double seconds);
  const Checkpoint* find(std::string_view name) const;
};

// One line per checkpoint: "PASS  thm1/gm.gamma  [exact-equal]".
std::string render_text(const std::vector<ProofReport>& reports);

// Versioned machine-readable document; wall time only when requested so
// that default output is byte-deterministic.
std::string render_json(const std::vector<ProofReport>& reports, bool include_timing = false);

}  // namespace smlab::proof
