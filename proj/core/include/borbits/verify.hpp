#pragma once

// Invariant suites behind the `verify` command. Hard checks decide the exit
// status; observation checks are reported but carry no theorem, so they
// never fail the run (m_alpha idempotence and the cover dimension step are
// the two of that kind).

#include <set>
#include <string>
#include <vector>

#include "borbits/order_dim.hpp"

namespace borbits {

struct CheckResult {
  std::string suite;
  std::string name;
  bool hard = true;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_rank = 4;
  std::vector<std::string> suites;  // empty means all
};

const std::vector<std::string>& verify_suite_names();
std::vector<CheckResult> run_verify(const VerifyOptions& opts);
// True when every hard check passed.
bool verify_passed(const std::vector<CheckResult>& results);

// Brute-force Bruhat oracle: the set of all subsequence products of one
// reduced word of w, which is exactly the lower interval [e, w].
std::set<WeylElement> subword_lower_set(const RootSystem& rs, const WeylElement& w);

}  // namespace borbits
