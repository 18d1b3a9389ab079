#include "msquant/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace msq {

namespace {

// x log(x / y) with the 0 log 0 = 0 convention; y > 0.
double xlogx_over(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log(x / y);
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::Gaussian: return "gaussian";
    case Family::Poisson: return "poisson";
    case Family::Bernoulli: return "bernoulli";
  }
  return "unknown";
}

std::string to_string(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::FMS: return "fms";
    case PenaltyKind::Zero: return "none";
    case PenaltyKind::CustomConcave: return "custom";
  }
  return "unknown";
}

double fms_penalty(double ell, double n) {
  return std::sqrt(2.0 * (1.0 + std::log(n) - std::log(ell)));
}

double concavity_defect(const std::function<double(double)>& fn, double n, int grid) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int a = 1; a <= grid; ++a) {
    for (int b = a + 1; b <= grid; ++b) {
      const double xa = n * a / grid;
      const double xb = n * b / grid;
      worst = std::max(worst, 0.5 * (fn(xa) + fn(xb)) - fn(0.5 * (xa + xb)));
    }
  }
  return worst;
}

Penalty Penalty::fms() { return Penalty(PenaltyKind::FMS); }
Penalty Penalty::zero() { return Penalty(PenaltyKind::Zero); }

Penalty Penalty::custom_concave(std::function<double(double)> fn) {
  if (!fn) throw std::invalid_argument("custom penalty: empty function");
  return Penalty(PenaltyKind::CustomConcave, std::move(fn));
}

double Penalty::operator()(double ell, double n) const {
  switch (kind_) {
    case PenaltyKind::FMS: return fms_penalty(ell, n);
    case PenaltyKind::Zero: return 0.0;
    case PenaltyKind::CustomConcave: return fn_(ell);
  }
  return 0.0;
}

ModelSpec ModelSpec::gaussian(double sigma, long long n, Penalty penalty) {
  ModelSpec m;
  m.family = Family::Gaussian;
  m.null_param = 0.0;
  m.sigma = sigma;
  m.penalty = std::move(penalty);
  m.n = n;
  m.validate();
  return m;
}

ModelSpec ModelSpec::poisson(double lambda0, long long n, Penalty penalty) {
  if (!(lambda0 > 0.0)) throw std::invalid_argument("poisson: lambda0 must be positive");
  ModelSpec m;
  m.family = Family::Poisson;
  m.null_param = std::log(lambda0);
  m.penalty = std::move(penalty);
  m.n = n;
  m.validate();
  return m;
}

ModelSpec ModelSpec::bernoulli(double p0, long long n, Penalty penalty) {
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("bernoulli: p0 must lie in (0,1)");
  ModelSpec m;
  m.family = Family::Bernoulli;
  m.null_param = std::log(p0 / (1.0 - p0));
  m.penalty = std::move(penalty);
  m.n = n;
  m.validate();
  return m;
}

double ModelSpec::null_mean() const {
  switch (family) {
    case Family::Gaussian: return null_param;
    case Family::Poisson: return std::exp(null_param);
    case Family::Bernoulli: return 1.0 / (1.0 + std::exp(-null_param));
  }
  return 0.0;
}

void ModelSpec::validate() const {
  if (n < 1) throw std::invalid_argument("model: n must be at least 1");
  if (!std::isfinite(null_param)) throw std::invalid_argument("model: null parameter not finite");
  if (family == Family::Gaussian && !(sigma > 0.0 && std::isfinite(sigma))) {
    throw std::invalid_argument("gaussian: sigma must be positive");
  }
  if (family == Family::Poisson && !(std::exp(null_param) > 0.0)) {
    throw std::invalid_argument("poisson: lambda0 underflows to zero");
  }
  if (family == Family::Bernoulli) {
    const double p0 = null_mean();
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("bernoulli: p0 must lie in (0,1)");
  }
}

bool feasible(Family family, double ell, double s) {
  if (!(ell > 0.0) || !std::isfinite(ell) || !std::isfinite(s)) return false;
  switch (family) {
    case Family::Gaussian: return true;
    case Family::Poisson: return s >= 0.0;
    case Family::Bernoulli: return s >= 0.0 && s <= ell;
  }
  return false;
}

double loglik_sup(Family family, double theta0, double ell, double s) {
  if (!feasible(family, ell, s)) {
    throw std::invalid_argument(
        fmt::format("loglik_sup: (ell={}, s={}) infeasible for {}", ell, s, to_string(family)));
  }
  switch (family) {
    case Family::Gaussian: {
      const double d = s - ell * theta0;
      return d * d / (2.0 * ell);
    }
    case Family::Poisson: {
      // ell * KL(s/ell || lambda0) = s log(s / (ell lambda0)) - s + ell lambda0
      const double expected = ell * std::exp(theta0);
      const double v = xlogx_over(s, expected) - s + expected;
      return v > 0.0 ? v : 0.0;
    }
    case Family::Bernoulli: {
      const double p0 = 1.0 / (1.0 + std::exp(-theta0));
      const double v = xlogx_over(s, ell * p0) + xlogx_over(ell - s, ell * (1.0 - p0));
      return v > 0.0 ? v : 0.0;
    }
  }
  return 0.0;
}

double Objective::operator()(double ell, double s) const {
  if (form_ == ObjectiveForm::GaussianDirect) {
    if (!(ell > 0.0)) throw std::invalid_argument("gaussian objective: ell must be positive");
    return std::abs(s) / (sigma_ * std::sqrt(ell)) - fms_penalty(ell, static_cast<double>(n_));
  }
  double stat;
  if (family_ == Family::Gaussian) {
    stat = loglik_sup(family_, theta0_ / sigma_, ell, s / sigma_);
  } else {
    stat = loglik_sup(family_, theta0_, ell, s);
  }
  return stat - penalty_(ell, static_cast<double>(n_));
}

std::string Objective::describe() const {
  std::string out = to_string(family_);
  switch (family_) {
    case Family::Gaussian: out += fmt::format(" sigma={}", sigma_); break;
    case Family::Poisson: out += fmt::format(" lambda0={}", std::exp(theta0_)); break;
    case Family::Bernoulli:
      out += fmt::format(" p0={}", 1.0 / (1.0 + std::exp(-theta0_)));
      break;
  }
  out += " penalty=" + to_string(penalty_.kind());
  return out;
}

Objective gaussian_objective(double sigma, long long n) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian_objective: sigma must be positive");
  }
  if (n < 1) throw std::invalid_argument("gaussian_objective: n must be at least 1");
  return Objective(ObjectiveForm::GaussianDirect, Family::Gaussian, sigma, 0.0, n,
                   Penalty::fms());
}

Objective general_objective(const ModelSpec& model) {
  model.validate();
  if (model.penalty.kind() == PenaltyKind::FMS) {
    throw RejectedPenalty(fmt::format(
        "penalty fms is not supported for the {} likelihood-ratio objective; "
        "only zero or concave penalties keep it quasiconvex",
        to_string(model.family)));
  }
  return Objective(ObjectiveForm::GeneralFamily, model.family, model.sigma, model.null_param,
                   model.n, model.penalty);
}

Objective make_objective(const ModelSpec& model) {
  if (model.family == Family::Gaussian && model.penalty.kind() == PenaltyKind::FMS) {
    model.validate();
    return gaussian_objective(model.sigma, model.n);
  }
  return general_objective(model);
}

}  // namespace msq
