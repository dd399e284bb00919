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

#ifndef MEDOPT_MECHANISM_HPP
#define MEDOPT_MECHANISM_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "medopt/instance.hpp"
#include "medopt/ironing.hpp"
#include "medopt/numerics.hpp"
#include "medopt/virtual_functions.hpp"

namespace medopt {

/// Raised when a posterior belief is requested for a signal that has zero
/// probability under the mechanism.
class UndefinedBeliefError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Density over one side's types, tabulated on a uniform grid.
struct PosteriorDensity {
  std::vector<double> x;
  std::vector<double> density;
};

/// Type-erased evaluation surface shared by the audit machinery.
struct MechanismOps {
  std::shared_ptr<const ProblemInstance> instance;
  std::function<double(double)> rb, rs;                   // interim trade rates
  std::function<double(double)> buyer_utility, seller_surplus;
  std::function<double(double)> buyer_payment, seller_payment;
  std::function<double(double, double)> misreport_utility_buyer;   // (true t, reported)
  std::function<double(double, double)> misreport_surplus_seller;  // (true q, reported)
  // Two-route slack pair per type: .first is the participation slack, .second
  // the obedience slack; they agree as a formula-level identity.
  std::function<std::pair<double, double>(double)> buyer_slacks, seller_slacks;
  // Per-report interim aggregates used by the pairwise misreport sweep
  // (the misreport utility is linear in the true type, so one report's
  // aggregates serve the whole lattice row).
  // Buyer: {a, b, cost} with U(rep; t) = a*t + b - cost.
  std::function<std::array<double, 3>(double)> buyer_report_aggregates;
  // Seller: {mass, payment} with SU(rep; q) = (payment - k*q) * mass.
  std::function<std::array<double, 2>(double)> seller_report_aggregates;
};

/// Deterministic threshold mechanism: trade is recommended exactly when
/// lambda(t) >= eta(q) (ties trade), with payments charged only when trade
/// is recommended. Payments follow the envelope construction, which pins
/// the lowest buyer type's utility and the highest seller type's surplus
/// to zero. Instances are immutable after construction and every
/// evaluation is pure, so concurrent queries are safe.
class ThresholdMechanism {
 public:
  /// Threshold forms: the exact virtual transforms, an ironed transform,
  /// or a custom monotone piecewise-linear function.
  struct Threshold {
    enum class Kind { kVirtualBuyer, kVirtualSeller, kIroned, kTabulated };
    Kind kind = Kind::kVirtualBuyer;
    IronedFunction iron;
    PiecewiseLinear table;

    static Threshold virtual_buyer() { return {Kind::kVirtualBuyer, {}, {}}; }
    static Threshold virtual_seller() { return {Kind::kVirtualSeller, {}, {}}; }
    static Threshold ironed(IronedFunction fn) { return {Kind::kIroned, std::move(fn), {}}; }
    static Threshold tabulated(PiecewiseLinear t) { return {Kind::kTabulated, {}, std::move(t)}; }
  };

  /// Builds the envelope-payment mechanism for the given monotone
  /// thresholds. Throws std::invalid_argument when the instance fails
  /// validation or a tabulated threshold is not non-decreasing.
  ThresholdMechanism(const ProblemInstance& inst, Threshold lambda, Threshold eta,
                     RegularityReport regularity = {});

  /// Custom monotone thresholds given as piecewise-linear tables.
  static ThresholdMechanism with_thresholds(const ProblemInstance& inst, PiecewiseLinear lambda,
                                            PiecewiseLinear eta);

  double lambda(double t) const;
  double eta(double q) const;

  /// 1 when lambda(t) >= eta(q), else 0. Throws std::domain_error outside
  /// the supports.
  int allocation(double t, double q) const;

  /// Largest seller type recommended to trade against t (the per-buyer
  /// trade set is the prefix [q1, boundary]); empty when t never trades.
  std::optional<double> trade_boundary_q(double t) const;
  /// Smallest buyer type recommended to trade against q.
  std::optional<double> trade_boundary_t(double q) const;

  /// Interim trade probability of the buyer report t.
  double interim_prob_buyer(double t) const;
  /// Interim trade probability of the seller report q.
  double interim_prob_seller(double q) const;

  /// alpha1-weighted interim trade rate of the buyer.
  double rb(double t) const;
  /// Interim trade rate of the seller.
  double rs(double q) const;

  double buyer_payment(double t) const;
  double seller_payment(double q) const;

  double buyer_utility(double t) const;
  double seller_surplus(double q) const;

  double misreport_utility_buyer(double t, double reported) const;
  double misreport_surplus_seller(double q, double reported) const;

  double revenue_direct() const;
  double revenue_virtual() const;

  /// Posterior seller-type density given the signal (1 = trade) observed
  /// by a buyer of type t. Throws UndefinedBeliefError for a
  /// zero-probability signal.
  PosteriorDensity posterior_quality(double t, int signal) const;

  bool ironed() const { return ironed_; }
  bool has_trade() const { return has_trade_; }
  const RegularityReport& regularity() const { return regularity_; }
  const IronedFunction* buyer_ironing() const;
  const IronedFunction* seller_ironing() const;

  const ProblemInstance& instance() const { return *inst_; }
  std::shared_ptr<const ProblemInstance> instance_ptr() const { return inst_; }

  /// Lowest trading buyer type / highest trading seller type (when any
  /// trade happens at all).
  std::optional<double> lowest_trading_t() const;
  std::optional<double> highest_trading_q() const;

  // Tabulated curves on uniform grids (used by the CSV exports).
  const std::vector<double>& t_grid() const { return t_grid_; }
  const std::vector<double>& q_grid() const { return q_grid_; }
  const std::vector<double>& lambda_curve() const { return lambda_tab_; }
  const std::vector<double>& eta_curve() const { return eta_tab_; }
  const std::vector<double>& buyer_payment_curve() const { return pb_tab_; }
  const std::vector<double>& seller_payment_curve() const { return ps_tab_; }
  const std::vector<double>& rb_curve() const { return rb_tab_; }
  const std::vector<double>& rs_curve() const { return rs_tab_; }
  const std::vector<double>& buyer_utility_curve() const { return ub_tab_; }
  const std::vector<double>& seller_surplus_curve() const { return su_tab_; }

  MechanismOps ops() const;

 private:
  double threshold_eval(const Threshold& th, bool buyer_side, double x) const;
  std::vector<double> threshold_critical_args(const Threshold& th) const;
  std::vector<double> threshold_critical_values(const Threshold& th, bool buyer_side) const;
  void build_tables();
  double ib_at(double t) const;  // cumulative buyer trade rate below t
  double js_at(double q) const;  // cumulative seller trade rate above q

  std::shared_ptr<const ProblemInstance> inst_;
  Threshold lambda_, eta_;
  RegularityReport regularity_;
  bool ironed_ = false;
  bool has_trade_ = false;
  double t1_, t2_, q1_, q2_;
  double tbot_ = 0.0, qtop_ = 0.0;  // trade boundaries, valid when has_trade_

  PiecewiseLinear qb_quant_, qs_quant_;  // quantile tables
  PiecewiseLinear calpha_, calpha2_;     // u -> cumulative alpha-weighted seller mass
  PiecewiseLinear ib_, js_;              // envelope integrals
  PiecewiseLinear atop_;                 // w -> upper tail integral of psi in probability space

  std::vector<double> t_grid_, q_grid_;
  std::vector<double> lambda_tab_, eta_tab_, pb_tab_, ps_tab_, rb_tab_, rs_tab_, ub_tab_, su_tab_;
};

/// Revenue-optimal mechanism: regular sides keep their exact virtual
/// transforms, irregular sides are ironed first. Throws
/// std::invalid_argument when the instance fails validation.
ThresholdMechanism solve(const ProblemInstance& inst);

/// Arbitrary trade-probability matrix with per-type payment schedules on a
/// rectangular grid; the audit target. Evaluation between grid nodes is
/// bilinear in pi and linear in the payments.
class TabulatedMechanism {
 public:
  TabulatedMechanism(std::shared_ptr<const ProblemInstance> inst, std::vector<double> t_grid,
                     std::vector<double> q_grid, std::vector<double> pi_row_major,
                     std::vector<double> pb, std::vector<double> ps);

  /// Samples a threshold mechanism onto an nt x nq grid.
  static TabulatedMechanism sample(const ThresholdMechanism& mech, int nt, int nq);

  double pi(double t, double q) const;
  double buyer_payment(double t) const { return pb_(t); }
  double seller_payment(double q) const { return ps_(q); }

  double interim_prob_buyer(double t) const;
  double rb(double t) const;
  double rs(double q) const;
  double buyer_utility(double t) const;
  double seller_surplus(double q) const;
  double misreport_utility_buyer(double t, double reported) const;
  double misreport_surplus_seller(double q, double reported) const;
  double revenue_direct() const;
  double revenue_virtual() const;
  PosteriorDensity posterior_quality(double t, int signal) const;

  const ProblemInstance& instance() const { return *inst_; }
  const std::vector<double>& t_grid() const { return t_grid_; }
  const std::vector<double>& q_grid() const { return q_grid_; }
  std::vector<double>& pi_matrix() { return pi_; }
  std::vector<double>& buyer_payments() { return pb_values_; }

  MechanismOps ops() const;

  /// Re-derives the interpolants after in-place edits to the tables.
  void refresh();

 private:
  std::shared_ptr<const ProblemInstance> inst_;
  std::vector<double> t_grid_, q_grid_;
  std::vector<double> pi_;  // row-major nt x nq, entries in [0, 1]
  std::vector<double> pb_values_, ps_values_;
  PiecewiseLinear pb_, ps_;
  PiecewiseLinear qb_quant_, qs_quant_;
};

}  // namespace medopt

#endif  // MEDOPT_MECHANISM_HPP
