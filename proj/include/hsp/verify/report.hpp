#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsp/algebra/presentation.hpp"

namespace hsp {

enum class Status { Pass, Fail, Discrepancy };

std::string_view to_string(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::Pass;
  /// Nonzero residual witness; absent on Pass.
  std::optional<Expression> residual;
  std::string notes;
};

struct Fingerprint {
  std::string presentation;
  /// FNV-1a of the presentation file text, 16 hex digits.
  std::string hash;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  std::chrono::duration<double> elapsed{};
  std::vector<Fingerprint> fingerprints;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }
};

Fingerprint fingerprint(const Presentation& pres);

/// Human-readable block: a header line, then one line per check.
std::string render_text(const SuiteReport& report);

/// One JSON object per line: a record per check, then a summary record
/// carrying the counts, fingerprints and the elapsed time. Only the
/// "elapsed_ms" field varies between runs.
std::string render_structured(const SuiteReport& report);

}  // namespace hsp
