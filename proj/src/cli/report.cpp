#include "lieperiod/cli/report.hpp"

namespace lieperiod::cli {

std::string render_json(const RunReport& r, bool timing) {
  io::Json j = {{"command", r.command},
                {"parameters", r.parameters},
                {"status", r.passed() ? "pass" : "fail"},
                {"payload", r.payload}};
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string render_text(const RunReport& r, bool timing) {
  std::string out;
  for (const auto& line : r.lines) out += line + "\n";
  out += r.command + ": " + (r.passed() ? "pass" : "fail");
  if (timing) out += " (" + std::to_string(r.elapsed_ms) + " ms)";
  return out + "\n";
}

}  // namespace lieperiod::cli
