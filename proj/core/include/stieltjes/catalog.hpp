#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

// The identity registry: every cataloged identity as a fixture binding a
// left-hand evaluation plan to a closed-form right-hand side with a
// tolerance, a reference label, and a typo-suspect flag.
//
// Typo-suspect fixtures never fail a run; they report a three-way
// comparison (computed LHS, the as-printed closed form, and a corrected
// candidate) and record which one the computation matches.

namespace stieltjes::catalog {

struct RunOverrides {
  std::optional<double> tol;
  std::optional<long> budget;
};

struct LhsOutcome {
  double value = 0.0;
  double err_est = 0.0;
  long n_evals = 0;
  bool converged = true;
  std::string detail;  // optional per-part breakdown
};

struct Identity {
  std::string id;           // stable, e.g. "eq-1-1"
  std::string description;
  std::string reference;    // identity designation, e.g. "Eq. (1.1)"
  double tol = 1e-7;
  long budget = 2000000;
  bool typo_suspect = false;
  std::string notes;
  std::function<LhsOutcome(double tol, long budget)> lhs;
  std::function<double()> rhs;  // adjudicated closed form
  // for typo-suspect fixtures: the as-printed value and the corrected candidate
  std::function<double()> printed_rhs;
  std::function<double()> candidate_rhs;
};

struct VerificationRecord {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  bool suspect = false;
  long n_evals = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

class Registry {
 public:
  static const Registry& instance();

  const std::vector<Identity>& identities() const { return identities_; }
  const Identity* find(const std::string& id) const;
  VerificationRecord verify(const Identity& ident, const RunOverrides& ov = {}) const;
  VerificationRecord verify(const std::string& id, const RunOverrides& ov = {}) const;

 private:
  Registry();
  std::vector<Identity> identities_;
};

// Parity-extraction check: a seeded random polynomial F of the given degree
// is run through both displays (plain and cosine-weighted kernels over
// [0, pi]^2) at z in {0.3, 0.8} and compared against direct coefficient
// sums; `lhs` of the record is the worst deviation.
VerificationRecord parity_extraction_check(std::uint64_t seed, int degree = 8);

// Seed for property fixtures: STIELTJES_VERIFY_SEED when set, else a fixed
// default.
std::uint64_t default_seed();

}  // namespace stieltjes::catalog
