#pragma once

#include <string>
#include <vector>

#include "kschubert/io.hpp"

namespace kschubert {

struct CheckOutcome {
  std::string check;
  std::string item;
  bool pass = false;
  std::string detail;  // empty on success
};

struct VerifyReport {
  std::string suite;
  int nmax = 0;
  std::vector<CheckOutcome> outcomes;  // in submission order, independent of scheduling

  bool passed() const;
  int failures() const;
  Json to_json() const;
  /// One line per check with pass/total, then the failing items.
  std::string to_text() const;
};

/// cross-constructions, bijections, identities, substitution.
const std::vector<std::string>& verify_suites();
/// Runs one suite for all ranks up to nmax; throws std::invalid_argument on an unknown suite.
VerifyReport run_verify(const std::string& suite, int nmax);

}  // namespace kschubert
