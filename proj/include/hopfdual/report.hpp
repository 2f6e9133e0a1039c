#pragma once

/**
 * @file report.hpp
 * @brief Check records shared by validators and the suite runner.
 */

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/error.hpp"

namespace hopfdual {

struct CheckResult {
  std::string id;
  std::string anchor;  // which statement the check exercises
  bool passed = false;
  std::string witness;  // empty on success
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  bool passed(const std::string& id) const {
    const CheckResult* c = find(id);
    return c != nullptr && c->passed;
  }

  void append(const ValidationReport& other, const std::string& prefix = "") {
    for (auto c : other.checks) {
      c.id = prefix + c.id;
      checks.push_back(std::move(c));
    }
  }

  void add(std::string id, std::string anchor, bool passed, std::string witness = "",
           double seconds = 0.0) {
    checks.push_back({std::move(id), std::move(anchor), passed, std::move(witness), seconds});
  }

  /// Runs `fn`, which returns a failure witness or nullopt. A thrown
  /// hopfdual::Error counts as a failure with the message as witness.
  template <class Fn>
  void run(std::string id, std::string anchor, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> witness;
    try {
      witness = fn();
    } catch (const Error& e) {
      witness = std::string(e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    add(std::move(id), std::move(anchor), !witness.has_value(), witness.value_or(""), secs);
  }

  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.id + ": " + c.witness;
    return "";
  }
};

}  // namespace hopfdual
