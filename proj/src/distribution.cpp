// Copyright 2026 The medopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medopt/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace medopt {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-15;
  constexpr double kFpMin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                     a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(std::isfinite(lo) && std::isfinite(hi))) {
    throw std::invalid_argument("interval bounds must be finite");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("interval requires lo < hi");
  }
}

Distribution::Distribution(DistFamily family, Interval support)
    : family_(family), support_(support) {}

Distribution Distribution::uniform(Interval support) {
  return Distribution(DistFamily::kUniform, support);
}

Distribution Distribution::truncated_normal(double mu, double sigma, Interval support) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
    throw std::invalid_argument("truncated normal requires finite mu and sigma > 0");
  }
  Distribution d(DistFamily::kTruncatedNormal, support);
  d.mu_ = mu;
  d.sigma_ = sigma;
  d.phi_lo_ = normal_cdf((support.lo - mu) / sigma);
  d.z_ = normal_cdf((support.hi - mu) / sigma) - d.phi_lo_;
  if (!(d.z_ > 0.0)) {
    throw std::invalid_argument("truncated normal has no mass on the support");
  }
  return d;
}

Distribution Distribution::beta_rescaled(double a, double b, Interval support) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("beta shape parameters must be positive");
  }
  Distribution d(DistFamily::kBetaRescaled, support);
  d.a_ = a;
  d.b_ = b;
  d.log_beta_ = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  return d;
}

Distribution Distribution::tabulated_pdf(std::vector<double> xs, std::vector<double> densities) {
  if (xs.size() < 2 || xs.size() != densities.size()) {
    throw std::invalid_argument("tabulated pdf needs >= 2 matching (x, density) points");
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw std::invalid_argument("tabulated pdf abscissae must be strictly increasing");
    }
  }
  for (double d : densities) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("tabulated pdf densities must be strictly positive");
    }
  }
  Distribution d(DistFamily::kTabulatedPdf, Interval(xs.front(), xs.back()));
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    total += 0.5 * (densities[i] + densities[i + 1]) * (xs[i + 1] - xs[i]);
  }
  d.renormalization_ = 1.0 / total;
  d.xs_ = std::move(xs);
  d.ds_ = std::move(densities);
  for (double& v : d.ds_) v *= d.renormalization_;
  d.cum_.resize(d.xs_.size());
  d.cum_[0] = 0.0;
  for (std::size_t i = 0; i + 1 < d.xs_.size(); ++i) {
    d.cum_[i + 1] = d.cum_[i] + 0.5 * (d.ds_[i] + d.ds_[i + 1]) * (d.xs_[i + 1] - d.xs_[i]);
  }
  d.cum_.back() = 1.0;  // exact by construction, pin away rounding
  return d;
}

double Distribution::pdf(double x) const {
  if (!support_.contains(x)) {
    throw std::domain_error("pdf argument outside the support");
  }
  switch (family_) {
    case DistFamily::kUniform:
      return 1.0 / support_.length();
    case DistFamily::kTruncatedNormal: {
      double z = (x - mu_) / sigma_;
      double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
      return phi / (sigma_ * z_);
    }
    case DistFamily::kBetaRescaled: {
      double u = (x - support_.lo) / support_.length();
      // Endpoint densities may be 0^negative = +inf for shapes below one;
      // that is the correct limit and stays strictly positive.
      double lu = a_ == 1.0 ? 0.0 : (a_ - 1.0) * std::log(u);
      double lv = b_ == 1.0 ? 0.0 : (b_ - 1.0) * std::log1p(-u);
      return std::exp(lu + lv - log_beta_) / support_.length();
    }
    case DistFamily::kTabulatedPdf: {
      auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t i = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
      if (i + 1 >= xs_.size()) i = xs_.size() - 2;
      double w = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
      return ds_[i] + w * (ds_[i + 1] - ds_[i]);
    }
  }
  return 0.0;  // unreachable
}

double Distribution::cdf(double x) const {
  if (x <= support_.lo) return 0.0;
  if (x >= support_.hi) return 1.0;
  switch (family_) {
    case DistFamily::kUniform:
      return (x - support_.lo) / support_.length();
    case DistFamily::kTruncatedNormal:
      return (normal_cdf((x - mu_) / sigma_) - phi_lo_) / z_;
    case DistFamily::kBetaRescaled: {
      double u = (x - support_.lo) / support_.length();
      return incomplete_beta(a_, b_, u);
    }
    case DistFamily::kTabulatedPdf: {
      auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
      if (i + 1 >= xs_.size()) i = xs_.size() - 2;
      double dx = x - xs_[i];
      double slope = (ds_[i + 1] - ds_[i]) / (xs_[i + 1] - xs_[i]);
      return cum_[i] + ds_[i] * dx + 0.5 * slope * dx * dx;
    }
  }
  return 0.0;  // unreachable
}

double Distribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("quantile argument must lie in [0, 1]");
  }
  if (p == 0.0) return support_.lo;
  if (p == 1.0) return support_.hi;
  double lo = support_.lo, hi = support_.hi;
  for (int i = 0; i < 100 && hi - lo > 0.0; ++i) {
    double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::string Distribution::describe() const {
  std::ostringstream os;
  switch (family_) {
    case DistFamily::kUniform:
      os << "uniform";
      break;
    case DistFamily::kTruncatedNormal:
      os << "truncated-normal(mu=" << mu_ << ", sigma=" << sigma_ << ")";
      break;
    case DistFamily::kBetaRescaled:
      os << "beta-rescaled(a=" << a_ << ", b=" << b_ << ")";
      break;
    case DistFamily::kTabulatedPdf:
      os << "tabulated-pdf(" << xs_.size() << " points)";
      break;
  }
  os << " on [" << support_.lo << ", " << support_.hi << "]";
  return os.str();
}

}  // namespace medopt
