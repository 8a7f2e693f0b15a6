#include "trijac/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "trijac/exact.hpp"

namespace trijac {

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
  ReportSummary s;
  s.total = static_cast<int>(reports.size());
  for (const auto& r : reports)
    if (!r.pass) ++s.failed;
  return s;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const std::string& version, const std::string& catalogue_hash,
                            unsigned long long seed, bool with_timings) {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["catalogue_sha256"] = catalogue_hash;
  doc["seed"] = seed;
  ReportSummary s = summarize(reports);
  doc["total"] = s.total;
  doc["failed"] = s.failed;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["relation"] = r.relation;
    o["representation"] = r.representation;
    o["mode"] = r.mode;
    o["status"] = r.pass ? "pass" : "fail";
    if (r.witness.empty())
      o["witness"] = nullptr;
    else
      o["witness"] = r.witness;
    // Timings are volatile; reports are byte-reproducible unless explicitly
    // requested otherwise.
    o["elapsed_ms"] = with_timings ? r.elapsed_ms : 0.0;
    arr.push_back(std::move(o));
  }
  doc["reports"] = std::move(arr);
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot rename into " + path);
}

}  // namespace trijac
