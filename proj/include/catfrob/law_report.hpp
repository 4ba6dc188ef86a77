#ifndef CATFROB_LAW_REPORT_HPP
#define CATFROB_LAW_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catfrob {

enum class Verdict { pass, fail, undecided, refuted, measured };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
    case Verdict::refuted: return "refuted";
    case Verdict::measured: return "measured";
  }
  return "?";
}

/// Evidence attached to a non-passing law: where it was evaluated, the first
/// basis index on which the two sides differ, and both sides' columns there.
struct Witness {
  std::string context;
  std::optional<std::size_t> index;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string note;
};

struct LawResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::size_t instances = 0;  // probe instances evaluated
  std::optional<Witness> witness;
  std::string detail;  // free-form measured value or explanation
};

/// Ordered collection of law results, one entry per law id. Repeated checks
/// of the same id are aggregated: the first non-passing instance wins.
class LawReport {
 public:
  LawResult& entry(const std::string& id) {
    for (auto& r : laws_)
      if (r.id == id) return r;
    laws_.push_back(LawResult{id, Verdict::pass, 0, std::nullopt, {}});
    return laws_.back();
  }

  void pass(const std::string& id) { ++entry(id).instances; }

  void fail(const std::string& id, Witness w, Verdict v = Verdict::fail) {
    LawResult& r = entry(id);
    ++r.instances;
    if (r.verdict == Verdict::pass) {
      r.verdict = v;
      r.witness = std::move(w);
    }
  }

  void record(const std::string& id, bool ok, Witness w) {
    if (ok) pass(id);
    else fail(id, std::move(w));
  }

  /// Sets a verdict outright (used for searches and measurements).
  void set(const std::string& id, Verdict v, std::string detail, std::optional<Witness> w = std::nullopt) {
    LawResult& r = entry(id);
    r.verdict = v;
    r.detail = std::move(detail);
    r.witness = std::move(w);
    if (r.instances == 0) r.instances = 1;
  }

  void merge(const LawReport& other, const std::string& prefix = "") {
    for (const auto& r : other.laws_) {
      LawResult& mine = entry(prefix + r.id);
      mine.instances += r.instances;
      if (mine.verdict == Verdict::pass && r.verdict != Verdict::pass) {
        mine.verdict = r.verdict;
        mine.witness = r.witness;
        mine.detail = r.detail;
      } else if (mine.detail.empty()) {
        mine.detail = r.detail;
      }
    }
  }

  const std::vector<LawResult>& laws() const { return laws_; }
  bool empty() const { return laws_.empty(); }

  const LawResult* find(const std::string& id) const {
    for (const auto& r : laws_)
      if (r.id == id) return &r;
    return nullptr;
  }

  bool all_pass() const {
    for (const auto& r : laws_)
      if (r.verdict != Verdict::pass && r.verdict != Verdict::measured) return false;
    return true;
  }

  /// Ids of laws whose verdict is not pass/measured.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& r : laws_)
      if (r.verdict != Verdict::pass && r.verdict != Verdict::measured) out.push_back(r.id);
    return out;
  }

 private:
  std::vector<LawResult> laws_;
};

}  // namespace catfrob

#endif  // CATFROB_LAW_REPORT_HPP
