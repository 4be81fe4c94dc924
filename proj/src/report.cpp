#include "indukt/report.hpp"

#include <algorithm>
#include <sstream>

namespace indukt {

void ValidationReport::fail(std::string witness) {
  pass = false;
  if (issues.size() < kMaxIssues) {
    issues.push_back(std::move(witness));
  } else {
    ++suppressed;
  }
}

void ValidationReport::observe(double residual) {
  max_residual = std::max(max_residual, residual);
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << " (max residual " << max_residual << ")";
  for (const auto& s : issues) os << "\n  - " << s;
  if (suppressed > 0) os << "\n  ... " << suppressed << " more";
  return os.str();
}

void CheckReport::residual(const std::string& key, double value, double tol) {
  residuals.emplace_back(key, value);
  if (!(value <= tol)) {
    pass = false;
    std::ostringstream os;
    os << key << " = " << value << " exceeds " << tol;
    failures.push_back(os.str());
  }
}

void CheckReport::stat(const std::string& key, long value) {
  stats.emplace_back(key, value);
}

void CheckReport::fail(std::string what) {
  pass = false;
  failures.push_back(std::move(what));
}

double CheckReport::max_residual() const {
  double m = 0.0;
  for (const auto& [_, v] : residuals) m = std::max(m, v);
  return m;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (pass ? "pass" : "FAIL");
  for (const auto& [k, v] : stats) os << "\n  " << k << " = " << v;
  for (const auto& [k, v] : residuals) os << "\n  " << k << " = " << v;
  for (const auto& f : failures) os << "\n  ! " << f;
  return os.str();
}

}  // namespace indukt
