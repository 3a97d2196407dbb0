/* Copyright 2026 The setcat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SETCAT_REPORT_HPP_
#define SETCAT_REPORT_HPP_

#include <string>
#include <vector>

namespace setcat {

// One checked law: a name, a verdict, and on failure a rendered witness.
struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string witness;
};

// Line-oriented result of a checker run.  The text form is what the CLI
// prints: one line per entry, "ok <name>" or "FAIL <name>: <witness>",
// followed by a summary line.
struct CheckReport {
  std::vector<CheckEntry> entries;

  void add(std::string name, bool passed, std::string witness = "") {
    entries.push_back({std::move(name), passed, std::move(witness)});
  }

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }

  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  std::string to_text() const {
    std::string out;
    std::size_t passed = 0;
    for (const auto& e : entries) {
      if (e.passed) {
        out += "ok   " + e.name + "\n";
        ++passed;
      } else {
        out += "FAIL " + e.name;
        if (!e.witness.empty()) out += ": " + e.witness;
        out += "\n";
      }
    }
    out += "summary: " + std::to_string(passed) + "/" +
           std::to_string(entries.size()) + " checks passed\n";
    return out;
  }
};

}  // namespace setcat

#endif  // SETCAT_REPORT_HPP_
