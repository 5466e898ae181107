#ifndef TWISTGEN_VERIFY_HPP
#define TWISTGEN_VERIFY_HPP

#include <map>

#include "twistgen/families.hpp"
#include "twistgen/reduction.hpp"

namespace twistgen {

enum class CheckStatus { pass, fail, skipped };

const char* check_status_name(CheckStatus s);
std::optional<CheckStatus> check_status_from_name(const std::string& name);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string witness;  // counterexample / supporting data
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;

  /// Conjunction of all non-skipped checks.
  bool overall() const;
};

/// Membership of every point on its curve: rf_equal on the equation
/// sides plus exact re-evaluation at `samples` fresh pole-free
/// assignments. Failures carry the offending assignment as witness.
std::vector<CheckResult> verify_membership(const TwistFamily& family,
                                           int samples, std::uint64_t seed);

/// D is a non-constant rational function and every point has a
/// non-constant coordinate and a y-coordinate that is not the zero
/// function (the criterion backing the infinite-order divisor classes).
std::vector<CheckResult> verify_nonconstant(const TwistFamily& family);

/// The sign-flip relations of the rank-3 families: v_i -> -v_i fixes T,
/// D and P_i, and sends P_j (j != i) to (x_j, -y_j). Skipped (with a
/// single entry) for families other than A3/B3.
std::vector<CheckResult> verify_phi_relations(const TwistFamily& family);

/// The full symbolic suite in a deterministic order.
VerificationReport run_verification(const TwistFamily& family, int samples,
                                    std::uint64_t seed);

/// Evaluates every curve and point at the assignment, checks the
/// memberships exactly, and certifies the order of each genus-1 member
/// point (quadratic twist with deg f in {3,4}, or m = 3 twists) via the
/// Mazur bound; genus >= 2 members are reported criterion-only.
/// Throws DegenerateError when the assignment hits a pole or makes the
/// twist degenerate.
VerificationReport certify_specialization(const TwistFamily& family,
                                          const std::map<Var, Rat>& assignment,
                                          std::uint64_t seed);

}  // namespace twistgen

#endif
