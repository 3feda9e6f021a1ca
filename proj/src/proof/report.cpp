#include "smlab/proof/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace smlab::proof {

void ProofReport::finalize(double seconds) {
  wall_time_s = seconds;
  passed = !checkpoints.empty();
  for (const auto& cp : checkpoints) passed = passed && cp.passed;
}

const Checkpoint* ProofReport::find(std::string_view name) const {
  for (const auto& cp : checkpoints) {
    if (cp.name == name) return &cp;
  }
  return nullptr;
}

std::string render_text(const std::vector<ProofReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "Theorem " << r.theorem << ": " << r.title << "\n";
    for (const auto& cp : r.checkpoints) {
      out << (cp.passed ? "  PASS  " : "  FAIL  ") << "thm" << r.theorem << "/" << cp.name << "  ["
          << name(cp.mode) << "]";
      if (cp.factor) out << "  factor = " << cp.factor->str();
      out << "\n";
      for (const auto& note : cp.notes) out << "          note: " << note << "\n";
      if (!cp.passed) {
        out << "          computed: " << cp.computed.str() << "\n";
        if (cp.mode != CheckMode::ExactZero) out << "          expected: " << cp.expected.str() << "\n";
      }
    }
    out << "  => " << (r.passed ? "PASS" : "FAIL") << " (" << r.checkpoints.size() << " checkpoints)\n";
  }
  return out.str();
}

std::string render_json(const std::vector<ProofReport>& reports, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["schema"] = "smlab.proof-report";
  doc["version"] = 1;
  bool all = true;
  auto& list = doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["theorem"] = r.theorem;
    jr["title"] = r.title;
    jr["passed"] = r.passed;
    if (include_timing) jr["wall_time_s"] = r.wall_time_s;
    auto& cps = jr["checkpoints"] = nlohmann::ordered_json::array();
    for (const auto& cp : r.checkpoints) {
      nlohmann::ordered_json jc;
      jc["name"] = cp.name;
      jc["mode"] = name(cp.mode);
      jc["status"] = cp.passed ? "pass" : "fail";
      jc["factor"] = cp.factor ? nlohmann::ordered_json(cp.factor->str()) : nlohmann::ordered_json(nullptr);
      jc["computed"] = cp.computed.str();
      jc["expected"] = cp.expected.str();
      jc["notes"] = cp.notes;
      cps.push_back(std::move(jc));
    }
    all = all && r.passed;
    list.push_back(std::move(jr));
  }
  doc["passed"] = all;
  return doc.dump(2) + "\n";
}

}  // namespace smlab::proof
