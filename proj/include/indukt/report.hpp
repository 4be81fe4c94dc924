#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace indukt {

/// Result of a report-style validator: pass/fail, worst residual seen, and a
/// capped list of witness messages.
struct ValidationReport {
  bool pass = true;
  double max_residual = 0.0;
  std::vector<std::string> issues;
  std::size_t suppressed = 0;

  static constexpr std::size_t kMaxIssues = 24;

  void fail(std::string witness);
  void observe(double residual);
  std::string summary() const;
};

/// Result of a theorem verifier: named residuals checked against a tolerance,
/// integer statistics (dimensions, counts), and failure messages.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, long>> stats;
  std::vector<std::string> failures;

  void residual(const std::string& key, double value, double tol);
  void stat(const std::string& key, long value);
  void fail(std::string what);
  double max_residual() const;
  std::string summary() const;
};

}  // namespace indukt
