// Result of one CLI command.
#pragma once

#include "lieperiod/io/json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lieperiod::cli {

enum class Status { pass, fail };

struct RunReport {
  std::string command;
  io::Json parameters = io::Json::object();
  Status status = Status::pass;
  /// Command-specific payload; on failure it carries "first_failure".
  io::Json payload = io::Json::object();
  /// Human-readable lines for text output.
  std::vector<std::string> lines;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::pass; }
};

/// Deterministic JSON; elapsed_ms is only included when `timing` is set.
std::string render_json(const RunReport& r, bool timing);
std::string render_text(const RunReport& r, bool timing);

}  // namespace lieperiod::cli
