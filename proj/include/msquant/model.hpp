#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace msq {

enum class Family { Gaussian, Poisson, Bernoulli };

enum class PenaltyKind { FMS, Zero, CustomConcave };

std::string to_string(Family family);
std::string to_string(PenaltyKind kind);

/// Scale penalty p(ell) subtracted from the local statistic.
///
/// FMS is sqrt(2 log(e n / ell)); Zero is identically 0; CustomConcave wraps
/// a caller-supplied function that is trusted to be concave on (0, n].
class Penalty {
 public:
  static Penalty fms();
  static Penalty zero();
  static Penalty custom_concave(std::function<double(double)> fn);

  PenaltyKind kind() const { return kind_; }

  /// Evaluates the penalty at interval length `ell` for sample size `n`.
  double operator()(double ell, double n) const;

 private:
  explicit Penalty(PenaltyKind kind, std::function<double(double)> fn = {})
      : kind_(kind), fn_(std::move(fn)) {}

  PenaltyKind kind_;
  std::function<double(double)> fn_;
};

/// Largest midpoint concavity defect (f(a) + f(b)) / 2 - f((a + b) / 2) over
/// pairs from a uniform grid on (0, n]. Clearly positive values mean `fn` is
/// not concave; used to spot-check custom penalties.
double concavity_defect(const std::function<double(double)>& fn, double n, int grid = 64);

/// sqrt(2 log(e n / ell)), with the logarithm expanded as 1 + log n - log ell.
double fms_penalty(double ell, double n);

/// Exponential-family null model together with its penalty.
///
/// `null_param` is the natural parameter theta0: the mean for Gaussian,
/// log(lambda0) for Poisson, logit(p0) for Bernoulli. `sigma` is only used by
/// the Gaussian family.
struct ModelSpec {
  Family family = Family::Gaussian;
  double null_param = 0.0;
  double sigma = 1.0;
  Penalty penalty = Penalty::fms();
  long long n = 1;

  static ModelSpec gaussian(double sigma, long long n, Penalty penalty = Penalty::fms());
  static ModelSpec poisson(double lambda0, long long n, Penalty penalty = Penalty::zero());
  static ModelSpec bernoulli(double p0, long long n, Penalty penalty = Penalty::zero());

  /// Null mean on the observation scale (mu0, lambda0 or p0).
  double null_mean() const;

  /// Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
};

/// Raised when a penalty is paired with a family for which the resulting
/// objective is not known to be quasiconvex.
class RejectedPenalty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// sup over theta of (theta - theta0) s - ell (psi(theta) - psi(theta0)),
/// in closed form via the MLE s / ell. Gaussian assumes unit variance.
///
/// Feasible region: Gaussian any s; Poisson s >= 0; Bernoulli 0 <= s <= ell.
/// Throws std::invalid_argument outside it or for ell <= 0.
double loglik_sup(Family family, double theta0, double ell, double s);

/// True when (ell, s) lies in the feasible region of `family`.
bool feasible(Family family, double ell, double s);

enum class ObjectiveForm { GaussianDirect, GeneralFamily };

/// The bivariate function h(ell, s) maximized over all intervals.
///
/// GaussianDirect: |s| / (sigma sqrt(ell)) - sqrt(2 log(e n / ell)).
/// GeneralFamily:  loglik_sup(ell, s) - p(ell) with p concave.
/// Both are quasiconvex on (0, n] x R restricted to the family's feasible
/// region, which is what lets the engine restrict attention to hull vertices.
class Objective {
 public:
  ObjectiveForm form() const { return form_; }
  Family family() const { return family_; }
  double sigma() const { return sigma_; }
  double theta0() const { return theta0_; }
  long long n() const { return n_; }
  const Penalty& penalty() const { return penalty_; }

  /// Value at (ell, s). Throws std::invalid_argument if infeasible.
  double operator()(double ell, double s) const;

  /// Short human-readable description, e.g. "gaussian sigma=1 penalty=fms".
  std::string describe() const;

 private:
  friend Objective gaussian_objective(double sigma, long long n);
  friend Objective general_objective(const ModelSpec& model);

  Objective(ObjectiveForm form, Family family, double sigma, double theta0, long long n,
            Penalty penalty)
      : form_(form), family_(family), sigma_(sigma), theta0_(theta0), n_(n),
        penalty_(std::move(penalty)) {}

  ObjectiveForm form_;
  Family family_;
  double sigma_;
  double theta0_;
  long long n_;
  Penalty penalty_;
};

Objective gaussian_objective(double sigma, long long n);

/// Likelihood-ratio objective minus a Zero or CustomConcave penalty.
/// Throws RejectedPenalty for the FMS penalty (use gaussian_objective for
/// the Gaussian scan statistic).
Objective general_objective(const ModelSpec& model);

/// Gaussian + FMS maps to gaussian_objective, everything else to
/// general_objective.
Objective make_objective(const ModelSpec& model);

}  // namespace msq
