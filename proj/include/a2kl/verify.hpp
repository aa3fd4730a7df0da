#pragma once

// Named verification suites.  Each suite recomputes a family of closed-form
// statements from first principles and records expected/actual pairs.

#include <cstddef>
#include <string>
#include <vector>

namespace a2kl {

struct CheckLine {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct Report {
  std::string id;
  std::vector<CheckLine> lines;
  bool passed() const;
  void add(std::string what, std::string expected, std::string actual);
  void add(std::string what, std::string expected, std::string actual, bool ok);
};

struct VerifyOptions {
  std::size_t max_len = 14;  ///< length bound of the Bruhat scans
  unsigned jobs = 1;
};

/// Every suite id accepted by verify(), in report order.
const std::vector<std::string>& verify_ids();

/// Runs one suite; throws std::invalid_argument on an unknown id.
Report verify(const std::string& id, const VerifyOptions& opts = {});

/// Runs every suite, in the order of verify_ids().
std::vector<Report> verify_all(const VerifyOptions& opts = {});

}  // namespace a2kl
