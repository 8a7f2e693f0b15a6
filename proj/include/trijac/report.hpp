#pragma once

#include <string>
#include <vector>

namespace trijac {

// Per-check outcome record. witness carries the first nonzero normal-form
// term or the failing sample tuple; empty on pass.
struct VerificationReport {
  std::string relation;
  std::string representation;  // "variable" | "degree" | "action" | "none"
  std::string mode;            // "symbolic" | "sampled-exact"
  bool pass = false;
  std::string witness;
  double elapsed_ms = 0.0;
};

struct ReportSummary {
  int total = 0;
  int failed = 0;
};

ReportSummary summarize(const std::vector<VerificationReport>& reports);

// JSON document: provenance header plus one object per report, schema
// { relation, representation, mode, status, witness, elapsed_ms }.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const std::string& version, const std::string& catalogue_hash,
                            unsigned long long seed, bool with_timings);

// Writes via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::string& path);

}  // namespace trijac
