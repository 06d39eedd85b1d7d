#include <algorithm>
#include <cmath>

#include "scf/design.hpp"
#include "scf/error.hpp"

namespace scf {

ResponseFunction ResponseFunction::constant(double value, double lambda_max) {
  ResponseFunction f;
  f.family_ = Family::Constant;
  f.params_ = {value};
  f.lambda_max_ = lambda_max;
  return f;
}

ResponseFunction ResponseFunction::step(double cutoff, double low, double high,
                                        double lambda_max) {
  ResponseFunction f;
  f.family_ = Family::Step;
  f.params_ = {cutoff, low, high};
  f.lambda_max_ = lambda_max;
  return f;
}

ResponseFunction ResponseFunction::logistic(double k, double lambda0, double lambda_max) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "logistic growth rate must be > 0");
  ResponseFunction f;
  f.family_ = Family::Logistic;
  f.params_ = {k, lambda0};
  f.lambda_max_ = lambda_max;
  return f;
}

ResponseFunction ResponseFunction::one_minus_logistic(double k, double lambda0,
                                                      double lambda_max) {
  ResponseFunction f = logistic(k, lambda0, lambda_max);
  f.family_ = Family::OneMinusLogistic;
  return f;
}

ResponseFunction ResponseFunction::inverse_shift(double gamma, double lambda_max, double scale) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma must be > 0");
  if (scale < 0.0) throw Error(ErrorCode::InvalidArgument, "inverse-shift scale must be >= 0");
  ResponseFunction f;
  f.family_ = Family::InverseShift;
  f.params_ = {gamma, scale};
  f.lambda_max_ = lambda_max;
  return f;
}

ResponseFunction ResponseFunction::table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw Error(ErrorCode::EmptySpec, "response table has no points");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first == points[i - 1].first) {
      throw Error(ErrorCode::InvalidArgument, "response table repeats a frequency");
    }
  }
  ResponseFunction f;
  f.family_ = Family::Table;
  f.lambda_min_ = points.front().first;
  f.lambda_max_ = points.back().first;
  f.has_min_ = true;
  f.points_ = std::move(points);
  return f;
}

ResponseFunction& ResponseFunction::set_domain(double lo, double hi) {
  if (lo < 0.0 || hi < lo) throw Error(ErrorCode::InvalidArgument, "invalid response domain");
  lambda_min_ = lo;
  lambda_max_ = hi;
  has_min_ = true;
  return *this;
}

ResponseFunction& ResponseFunction::set_lambda_max(double hi) {
  if (hi < 0.0 || hi < lambda_min_) {
    throw Error(ErrorCode::InvalidArgument, "invalid response domain");
  }
  lambda_max_ = hi;
  return *this;
}

double ResponseFunction::operator()(double lambda) const {
  switch (family_) {
    case Family::Constant: return params_[0];
    case Family::Step: return lambda < params_[0] ? params_[1] : params_[2];
    case Family::Logistic: return 1.0 / (1.0 + std::exp(-params_[0] * (lambda - params_[1])));
    case Family::OneMinusLogistic:
      return 1.0 - 1.0 / (1.0 + std::exp(-params_[0] * (lambda - params_[1])));
    case Family::InverseShift: return 1.0 / (params_[0] + params_[1] * lambda);
    case Family::Table: {
      if (lambda <= points_.front().first) return points_.front().second;
      if (lambda >= points_.back().first) return points_.back().second;
      auto hi = std::upper_bound(points_.begin(), points_.end(), lambda,
                                 [](double l, const auto& p) { return l < p.first; });
      auto lo = hi - 1;
      const double t = (lambda - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return 0.0;
}

const char* ResponseFunction::family_name() const {
  switch (family_) {
    case Family::Table: return "table";
    case Family::Constant: return "constant";
    case Family::Step: return "step";
    case Family::Logistic: return "logistic";
    case Family::OneMinusLogistic: return "one_minus_logistic";
    case Family::InverseShift: return "inverse_shift";
  }
  return "?";
}

TabulatedTargets tabulate(const ResponseSpec& spec, const std::vector<double>& q_gradient,
                          const std::vector<double>& q_curl) {
  TabulatedTargets t;
  t.g0 = spec.g0;
  for (double l : q_gradient) t.gradient.push_back(spec.gradient ? (*spec.gradient)(l) : spec.g0);
  for (double l : q_curl) t.curl.push_back(spec.curl ? (*spec.curl)(l) : spec.g0);
  return t;
}

}  // namespace scf
