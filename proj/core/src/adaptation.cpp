#include "evodyn/adaptation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evodyn {

double interpret(InterpretationKind kind, double f, const FitnessContext& ctx) {
  switch (kind) {
    case InterpretationKind::I1:
      return f > ctx.f_parent ? 1.0 : 0.0;
    case InterpretationKind::I2:
      return f - ctx.f_parent;
    case InterpretationKind::I3:
      return std::max(0.0, f - ctx.f_parent);
    case InterpretationKind::I4:
      return f > ctx.f_median ? 1.0 : 0.0;
    case InterpretationKind::I5: {
      const double denom = ctx.f_best - ctx.f_median;
      if (denom == 0.0) return 0.0;  // degenerate spread
      return (f - ctx.f_best) / denom;
    }
    case InterpretationKind::I6:
      return std::max(0.0, f - ctx.f_best);
    case InterpretationKind::I7:
      return std::max(0.0, f - ctx.f_90th);
    case InterpretationKind::I8: {
      double count = 0.0;
      for (double fi : ctx.population_f)
        if (f > fi) count += 1.0;
      return count;
    }
    case InterpretationKind::RawEtv:
    case InterpretationKind::Outlier:
      throw std::invalid_argument("interpret: takeover kinds use the event path");
  }
  return 0.0;
}

double normal_upper_tail(double z) {
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double p_alpha(double p_z, int m) {
  if (m <= 0) return 0.0;
  if (p_z <= 0.0) return 1.0;
  if (p_z >= 1.0) return 0.0;
  return std::exp(static_cast<double>(m) * std::log1p(-p_z));
}

std::vector<double> outlier_rewards(
    std::span<const std::pair<int, int>> events, int n_ops) {
  std::vector<double> rewards(n_ops, 0.0);
  const std::size_t n = events.size();
  if (n < 2) return rewards;  // sample sd undefined for a single event

  double mean = 0.0;
  for (const auto& [op, size] : events) mean += std::log(static_cast<double>(size));
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const auto& [op, size] : events) {
    const double d = std::log(static_cast<double>(size)) - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) return rewards;  // constant data has no outliers

  std::vector<int> m(n_ops, 0);
  for (const auto& [op, size] : events)
    if (op >= 0 && op < n_ops) ++m[op];

  for (const auto& [op, size] : events) {
    if (op < 0 || op >= n_ops) continue;
    const double z = (std::log(static_cast<double>(size)) - mean) / sd;
    rewards[op] += p_alpha(normal_upper_tail(z), m[op]);
  }
  return rewards;
}

Controller::Controller(ControllerConfig cfg) : cfg_(cfg) {
  if (cfg_.n_ops < 1) throw std::invalid_argument("Controller: n_ops < 1");
  if (cfg_.p_min * cfg_.n_ops > 1.0)
    throw std::invalid_argument("Controller: p_min too large");
  q_.assign(cfg_.n_ops, 0.0);
  r_.assign(cfg_.n_ops, 0.0);
  p_.assign(cfg_.n_ops, 1.0 / cfg_.n_ops);
  archive_.resize(cfg_.n_ops);
  m_.assign(cfg_.n_ops, 0);
}

double Controller::p_max() const {
  // Chosen so the pursuit fixed point sums to one: the winner's target plus
  // n_ops-1 floors.
  return 1.0 - (cfg_.n_ops - 1) * cfg_.p_min;
}

void Controller::record_interpretation(int op, double value) {
  archive_[op].push_back(value);
  ++m_[op];
}

void Controller::record_etv_event(int op, int etv_size) {
  etv_batch_.emplace_back(op, etv_size);
  ++m_[op];
}

void Controller::cycle_update() {
  const int n = cfg_.n_ops;

  // rewards
  if (cfg_.interpretation == InterpretationKind::Outlier) {
    r_ = outlier_rewards(etv_batch_, n);
  } else if (cfg_.interpretation == InterpretationKind::RawEtv) {
    std::fill(r_.begin(), r_.end(), 0.0);
    for (const auto& [op, size] : etv_batch_) r_[op] += static_cast<double>(size);
    for (int i = 0; i < n; ++i)
      if (m_[i] > 0) r_[i] /= static_cast<double>(m_[i]);
  } else {
    std::fill(r_.begin(), r_.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      if (archive_[i].empty()) continue;
      double sum = 0.0;
      for (double v : archive_[i]) sum += v;
      r_[i] = sum / static_cast<double>(archive_[i].size());
    }
  }

  // quality, floored at zero so matching ratios stay valid
  for (int i = 0; i < n; ++i) {
    q_[i] += cfg_.alpha * (r_[i] - q_[i]);
    if (q_[i] < 0.0) q_[i] = 0.0;
  }

  if (cfg_.strategy == ProbabilityStrategy::Matching) {
    // scale out max(Q) first: the ratio form is scale free, and dividing by
    // the maximum keeps the symmetric fixed point exact in floating point
    double q_max = 0.0;
    for (double q : q_) q_max = std::max(q_max, q);
    if (q_max > 0.0) {
      double q_total = 0.0;
      for (double q : q_) q_total += q / q_max;
      const double span = 1.0 - n * cfg_.p_min;
      for (int i = 0; i < n; ++i)
        p_[i] = cfg_.p_min + span * ((q_[i] / q_max) / q_total);
    }
    // all-zero qualities: probabilities stay as they were
  } else {
    double q_total = 0.0;
    for (double q : q_) q_total += q;
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (q_[i] > q_[best]) best = i;  // ties keep the lowest index
    const double target_hi = p_max();
    for (int i = 0; i < n; ++i) {
      // all targets drop to the floor when no quality signal exists
      const double target =
          (q_total > 0.0 && i == best) ? target_hi : cfg_.p_min;
      p_[i] += cfg_.beta * (target - p_[i]);
    }
    // floors then renormalize the excess above the floor
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      if (p_[i] < cfg_.p_min) p_[i] = cfg_.p_min;
      total += p_[i];
    }
    const double span = 1.0 - n * cfg_.p_min;
    const double excess = total - n * cfg_.p_min;
    if (excess > 1e-300) {
      for (int i = 0; i < n; ++i)
        p_[i] = cfg_.p_min + (p_[i] - cfg_.p_min) * span / excess;
    } else {
      std::fill(p_.begin(), p_.end(), 1.0 / n);
    }
  }

  // reset cycle archives
  for (auto& a : archive_) a.clear();
  etv_batch_.clear();
  std::fill(m_.begin(), m_.end(), 0);
  ++t_;
}

}  // namespace evodyn
