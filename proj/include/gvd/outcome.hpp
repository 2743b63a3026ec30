#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gvd {

/// Three-valued verdict. Unknown means an undecided side-condition could
/// still change the answer; it is never silently collapsed to False.
enum class Verdict { True, False, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    default: return "unknown";
  }
}

/// One step of a decomposition: ring snapshot, pivot, which branch the
/// recursion followed, and whether the step was degenerate.
struct TraceStep {
  std::string ring;
  std::string pivot;
  std::string branch;  // "C", "N", or "both"
  bool degenerate = false;
};

struct CheckOutcome {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> reasons;
  std::vector<TraceStep> trace;

  bool is_true() const { return verdict == Verdict::True; }
  bool is_false() const { return verdict == Verdict::False; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }

  static CheckOutcome yes() { return {Verdict::True, {}, {}}; }
  static CheckOutcome yes(std::string reason) { return {Verdict::True, {std::move(reason)}, {}}; }
  static CheckOutcome no(std::string reason) { return {Verdict::False, {std::move(reason)}, {}}; }
  static CheckOutcome unknown(std::string reason) {
    return {Verdict::Unknown, {std::move(reason)}, {}};
  }
};

}  // namespace gvd
