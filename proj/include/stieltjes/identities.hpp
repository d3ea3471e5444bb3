#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stieltjes/precision.hpp"

namespace stieltjes {

// Parameter record for one identity evaluation.  Unused fields stay empty;
// x and s accept decimal ("0.3") or fraction ("1/8") syntax.
struct IdentityParams {
  std::optional<long> p;
  std::optional<long> q;
  std::optional<long> n;
  std::optional<std::string> x;
  std::optional<std::string> s;
  std::optional<long> terms;   // series length for partial-sum identities
  std::optional<long> j_max;   // outer truncation for series identities

  std::string to_string() const;
};

struct IdentityReport {
  std::string name;
  std::string params;
  BigFloat lhs;
  BigFloat rhs;
  BigFloat residual;
  BigFloat tolerance;
  bool pass = false;

  std::string to_string() const;
};

// Names of all registered identities, in deterministic registry order.
std::vector<std::string> registry_names();

// Evaluate one named identity.  Both sides go through maximally independent
// code paths; out-of-registry names and out-of-domain parameters throw.
IdentityReport run_identity(const std::string& name, const IdentityParams& params,
                            const PrecisionContext& ctx);

struct SuiteOptions {
  unsigned q_max = 5;
};

// Run every identity whose name matches the pattern (exact name, or a
// trailing-* prefix pattern, or empty/"*"/"all" for everything) over its
// default parameter grid.  Deterministic order.  Throws on a pattern that
// matches nothing.
std::vector<IdentityReport> run_suite(const std::string& pattern, const PrecisionContext& ctx,
                                      const SuiteOptions& options = {});

}  // namespace stieltjes
