#include "hsp/verify/report.hpp"

#include <cstdio>
#include <sstream>

#include "hsp/text/presentation_io.hpp"
#include "json.hpp"

namespace hsp {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Discrepancy: return "discrepancy";
  }
  return "?";
}

std::size_t SuiteReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

Fingerprint fingerprint(const Presentation& pres) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : write_presentation(pres)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return {pres.name(), buf};
}

std::string render_text(const SuiteReport& report) {
  std::ostringstream out;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", report.elapsed.count());
  out << "suite " << report.suite << ": " << report.results.size() << " checks, " << report.count(Status::Pass)
      << " pass, " << report.count(Status::Discrepancy) << " discrepancy, " << report.count(Status::Fail)
      << " fail (" << secs << " s)\n";
  for (const auto& r : report.results) {
    std::string tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "DISCREPANCY";
    tag.resize(12, ' ');
    out << "  " << tag << r.id;
    if (r.residual) out << "  residual " << to_string(*r.residual);
    out << "\n";
    if (!r.notes.empty()) out << "              " << r.notes << "\n";
  }
  return out.str();
}

std::string render_structured(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["id"] = r.id;
    j["status"] = std::string(to_string(r.status));
    j["residual"] = r.residual ? to_string(*r.residual) : "0";
    j["notes"] = r.notes;
    out << j.dump() << "\n";
  }
  nlohmann::ordered_json s;
  s["suite"] = report.suite;
  s["record"] = "summary";
  s["pass"] = report.count(Status::Pass);
  s["discrepancy"] = report.count(Status::Discrepancy);
  s["fail"] = report.count(Status::Fail);
  nlohmann::ordered_json fp = nlohmann::ordered_json::object();
  for (const auto& f : report.fingerprints) fp[f.presentation] = f.hash;
  s["fingerprints"] = fp;
  s["elapsed_ms"] = static_cast<long long>(report.elapsed.count() * 1000.0);
  out << s.dump() << "\n";
  return out.str();
}

}  // namespace hsp
