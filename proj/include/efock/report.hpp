#pragma once

#include <string>
#include <vector>

namespace efock {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Result of a relation-audit suite: one line per checked identity.
struct CheckReport {
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string detail = "") {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : lines)
      if (!l.pass) ++n;
    return n;
  }

  std::string str() const {
    std::string out;
    for (const auto& l : lines) {
      out += l.pass ? "[PASS] " : "[FAIL] ";
      out += l.name;
      if (!l.pass && !l.detail.empty()) out += " (" + l.detail + ")";
      out += "\n";
    }
    out += "checks: " + std::to_string(lines.size() - failures()) + "/" +
           std::to_string(lines.size()) + " passed\n";
    return out;
  }
};

}  // namespace efock
