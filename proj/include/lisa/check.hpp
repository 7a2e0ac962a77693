#ifndef LISA_CHECK_HPP
#define LISA_CHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lisa {

enum class Verdict { pass, fail, skipped };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct AxiomResult {
  std::string axiom;
  std::string description;
  Verdict verdict = Verdict::pass;
  std::string counterexample;  // rendered element expressions, empty on pass
  std::string skip_reason;
};

struct CheckMode {
  bool exhaustive = true;
  int trials = 1000;
  uint64_t seed = 20260810;

  std::string str() const {
    if (exhaustive) return "exhaustive";
    return "sampled(trials=" + std::to_string(trials) + ",seed=" + std::to_string(seed) + ")";
  }
};

/// Outcome of one axiom battery over one carrier. Exhaustive verdicts cover
/// the whole carrier; sampled verdicts embed the seed for replay.
struct CheckReport {
  std::string subject;
  CheckMode mode;
  std::vector<AxiomResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (r.verdict == Verdict::fail) return false;
    return true;
  }

  const AxiomResult* find(const std::string& id) const {
    for (const auto& r : results)
      if (r.axiom == id) return &r;
    return nullptr;
  }

  void add(const std::string& id, const std::string& desc, bool passed,
           const std::string& cex) {
    AxiomResult r;
    r.axiom = id;
    r.description = desc;
    r.verdict = passed ? Verdict::pass : Verdict::fail;
    if (!passed) r.counterexample = cex;
    results.push_back(std::move(r));
  }

  void add_skip(const std::string& id, const std::string& desc, const std::string& why) {
    AxiomResult r;
    r.axiom = id;
    r.description = desc;
    r.verdict = Verdict::skipped;
    r.skip_reason = why;
    results.push_back(std::move(r));
  }

  void absorb(const CheckReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
  }

  std::string summary() const {
    std::string s;
    for (const auto& r : results) {
      s += r.axiom + " [" + verdict_name(r.verdict) + "]";
      if (r.verdict == Verdict::fail) s += " at " + r.counterexample;
      if (r.verdict == Verdict::skipped) s += " (" + r.skip_reason + ")";
      s += "\n";
    }
    return s;
  }
};

struct CheckOptions {
  int trials = 1000;
  uint64_t seed = 20260810;
  int sample_idempotents = 8;  // idempotent pool size in sampled mode
  int extra_scalars = 4;       // random scalars appended to the fixed pool
};

}  // namespace lisa

#endif
