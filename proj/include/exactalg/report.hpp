#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace exactalg {

// Outcome of an axiom or law check: empty means everything held.
struct Report {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
  }
};

// A computed result failed its own post-verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exactalg
