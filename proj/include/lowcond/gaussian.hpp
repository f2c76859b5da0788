#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/math/distributions/normal.hpp>

#include "lowcond/errors.hpp"
#include "lowcond/graph.hpp"
#include "lowcond/oracle.hpp"
#include "lowcond/separators.hpp"
#include "lowcond/subsets.hpp"

namespace lowcond {

struct TestConfig {
  /// Population mode: |rho| <= epsilon counts as zero.
  double epsilon = 1e-9;
  /// Two-sided level of the Fisher-z test.
  double significance = 0.05;

  void validate() const {
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
    if (!(significance > 0.0 && significance < 1.0)) {
      throw DomainError("significance must lie in (0, 1)");
    }
  }
};

inline constexpr double kConditionLimit = 1e12;

/// Partial correlation of a and b given S, from the inverse of the
/// covariance sub-block on {a, b} u S.
inline double partial_correlation(const Eigen::MatrixXd& sigma, Vertex a, Vertex b,
                                  const VertexSet& s) {
  const auto p = static_cast<std::size_t>(sigma.rows());
  if (sigma.cols() != sigma.rows()) throw DomainError("covariance matrix must be square");
  if (a >= p || b >= p) throw LookupError("partial_correlation: vertex out of range");
  if (a == b) throw DomainError("partial_correlation: a and b must differ");
  if (s.contains(a) || s.contains(b)) {
    throw DomainError("partial_correlation: conditioning set contains a or b");
  }
  std::vector<Eigen::Index> idx{static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)};
  for (Vertex v : s) {
    if (v >= p) throw LookupError("partial_correlation: conditioning vertex out of range");
    idx.push_back(static_cast<Eigen::Index>(v));
  }
  const Eigen::MatrixXd block = sigma(idx, idx);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);
  if (eig.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  const auto& lambda = eig.eigenvalues();
  const double lo = lambda.minCoeff();
  const double hi = lambda.maxCoeff();
  if (!(lo > 0.0) || hi / lo > kConditionLimit) {
    throw NumericError("covariance sub-block is singular or ill-conditioned (condition > 1e12)");
  }
  // Only three entries of the inverse are needed.
  const auto& q = eig.eigenvectors();
  double kaa = 0.0, kbb = 0.0, kab = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    kaa += q(0, i) * q(0, i) / lambda(i);
    kbb += q(1, i) * q(1, i) / lambda(i);
    kab += q(0, i) * q(1, i) / lambda(i);
  }
  return std::clamp(-kab / std::sqrt(kaa * kbb), -1.0, 1.0);
}

/// Zero-mean Gaussian given by its precision matrix. The support graph is
/// the off-diagonal nonzero pattern of omega.
class GaussianModel {
 public:
  GaussianModel(std::vector<std::string> labels, Eigen::MatrixXd omega) : omega_(std::move(omega)) {
    const auto p = omega_.rows();
    if (omega_.cols() != p || static_cast<std::size_t>(p) != labels.size()) {
      throw DomainError("precision matrix shape does not match the vertex labels");
    }
    if (p == 0) throw DomainError("model needs at least one vertex");
    const double scale = std::max(1.0, omega_.cwiseAbs().maxCoeff());
    if ((omega_ - omega_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw NumericError("precision matrix is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(omega_, Eigen::EigenvaluesOnly);
    if (!(eig.eigenvalues().minCoeff() > 1e-10)) {
      throw NumericError("precision matrix is not positive definite");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(omega_);
    if (llt.info() != Eigen::Success) throw NumericError("Cholesky factorization of omega failed");
    sigma_ = llt.solve(Eigen::MatrixXd::Identity(p, p));
    sigma_ = 0.5 * (sigma_ + sigma_.transpose());
    const double residual = (omega_ * sigma_ - Eigen::MatrixXd::Identity(p, p)).cwiseAbs().maxCoeff();
    if (residual > 1e-8) throw NumericError("omega * sigma deviates from identity");

    std::vector<Edge> edges;
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = i + 1; j < p; ++j) {
        if (omega_(i, j) != 0.0) edges.emplace_back(i, j);
      }
    }
    graph_ = UndirectedGraph(std::move(labels), edges);
  }

  const Eigen::MatrixXd& omega() const noexcept { return omega_; }
  const Eigen::MatrixXd& sigma() const noexcept { return sigma_; }
  const UndirectedGraph& graph() const noexcept { return graph_; }

 private:
  Eigen::MatrixXd omega_;
  Eigen::MatrixXd sigma_;
  UndirectedGraph graph_;
};

struct GenerationOptions {
  double magnitude_low = 0.2;
  double magnitude_high = 0.8;
  std::uint64_t seed = 0;
  /// A non-separating query must show |rho| above this bound.
  double audit_epsilon = 1e-6;
  int max_attempts = 100;
  /// Largest conditioning set audited; default |V|-2 up to 12 vertices, so(G) beyond.
  std::optional<std::size_t> audit_order;
};

struct FaithfulnessViolation {
  Vertex a;
  Vertex b;
  VertexSet conditioning;
  double rho;
};

/// First query (a < b, |S| <= max_order, lexicographic) where S does not
/// separate a and b in the support graph yet |rho| <= bound.
inline std::optional<FaithfulnessViolation> find_faithfulness_violation(
    const GaussianModel& model, double bound, std::size_t max_order) {
  const auto& g = model.graph();
  const std::size_t n = g.vertex_count();
  std::optional<FaithfulnessViolation> found;
  for (Vertex a = 0; a < n && !found; ++a) {
    for (Vertex b = a + 1; b < n && !found; ++b) {
      const auto pool = others(n, a, b);
      for (std::size_t k = 0; k <= std::min(max_order, pool.size()) && !found; ++k) {
        for_each_subset_of_size(pool, k, [&](const VertexSet& s) {
          if (separates(g, VertexSet{a}, VertexSet{b}, s)) return false;
          const double rho = partial_correlation(model.sigma(), a, b, s);
          if (std::abs(rho) <= bound) found = FaithfulnessViolation{a, b, s, rho};
          return found.has_value();
        });
      }
    }
  }
  return found;
}

inline std::size_t default_audit_order(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0;
  if (n <= 12) return n - 2;
  const auto so = separability_order(g);
  return so.is_infinite() ? n - 2 : so.value();
}

/// Random precision matrix with support exactly E, made positive definite by
/// diagonal dominance, resampled until it passes the faithfulness audit.
inline GaussianModel generate_faithful_model(const UndirectedGraph& g,
                                             const GenerationOptions& options = {}) {
  if (g.vertex_count() == 0) throw DomainError("cannot generate a model without vertices");
  if (!(options.magnitude_low > 0.0 && options.magnitude_low <= options.magnitude_high &&
        options.magnitude_high < 1.0)) {
    throw DomainError("magnitude range must satisfy 0 < low <= high < 1");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t order = options.audit_order.value_or(default_audit_order(g));
  std::string last_failure;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> magnitude(options.magnitude_low, options.magnitude_high);
    std::uniform_real_distribution<double> jitter(0.1, 0.5);
    std::bernoulli_distribution negative(0.5);

    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [a, b] : g.edges()) {
      const double w = magnitude(rng) * (negative(rng) ? -1.0 : 1.0);
      omega(a, b) = w;
      omega(b, a) = w;
    }
    for (std::size_t v = 0; v < n; ++v) {
      omega(v, v) = omega.row(v).cwiseAbs().sum() + jitter(rng);
    }
    GaussianModel model(g.labels(), std::move(omega));
    const auto violation = find_faithfulness_violation(model, options.audit_epsilon, order);
    if (!violation) return model;
    last_failure = "pair (" + g.label(violation->a) + ", " + g.label(violation->b) + ") given {";
    for (std::size_t i = 0; i < violation->conditioning.size(); ++i) {
      last_failure += (i ? " " : "") + g.label(violation->conditioning[i]);
    }
    last_failure += "}";
  }
  throw GenerationError("faithfulness audit failed after " + std::to_string(options.max_attempts) +
                        " attempts; last offending query: " + last_failure);
}

/// n independent rows from N(0, sigma).
inline Eigen::MatrixXd sample(const GaussianModel& model, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample size must be positive");
  Eigen::LLT<Eigen::MatrixXd> llt(model.sigma());
  if (llt.info() != Eigen::Success) throw NumericError("Cholesky factorization of sigma failed");
  const Eigen::MatrixXd lower = llt.matrixL();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd z(static_cast<Eigen::Index>(n), model.sigma().rows());
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = normal(rng);
  }
  return z * lower.transpose();
}

/// Unbiased sample covariance of the columns.
inline Eigen::MatrixXd sample_covariance(const Eigen::MatrixXd& data) {
  if (data.rows() < 2) throw DomainError("sample covariance needs at least two rows");
  const Eigen::RowVectorXd mean = data.colwise().mean();
  const Eigen::MatrixXd centered = data.rowwise() - mean;
  return centered.transpose() * centered / static_cast<double>(data.rows() - 1);
}

/// |atanh(r)| * sqrt(n - |S| - 3).
inline double fisher_z_statistic(double r, std::size_t n, std::size_t conditioning_size) {
  if (n <= conditioning_size + 3) {
    throw DomainError("insufficient samples for conditioning order " +
                      std::to_string(conditioning_size));
  }
  if (std::abs(r) >= 1.0) return std::numeric_limits<double>::infinity();
  return std::abs(std::atanh(r)) * std::sqrt(static_cast<double>(n - conditioning_size - 3));
}

/// Two-sided standard normal critical value.
inline double normal_critical_value(double significance) {
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 1.0 - significance / 2.0);
}

/// Population oracle: independent iff |rho| <= epsilon.
class GaussianOracle : public CIOracle {
 public:
  GaussianOracle(const GaussianModel& model, TestConfig config)
      : CIOracle(model.graph().labels()), sigma_(model.sigma()), config_(config) {
    config_.validate();
  }

 protected:
  bool test(Vertex a, Vertex b, const VertexSet& s) const override {
    return std::abs(partial_correlation(sigma_, a, b, s)) <= config_.epsilon;
  }

 private:
  Eigen::MatrixXd sigma_;
  TestConfig config_;
};

/// Statistical oracle: Fisher-z test of zero partial correlation on data.
class FisherZOracle : public CIOracle {
 public:
  FisherZOracle(std::vector<std::string> labels, const Eigen::MatrixXd& data, TestConfig config)
      : CIOracle(std::move(labels)),
        n_(static_cast<std::size_t>(data.rows())),
        covariance_(sample_covariance(data)),
        config_(config) {
    config_.validate();
    if (static_cast<std::size_t>(data.cols()) != vertex_count()) {
      throw DomainError("data has " + std::to_string(data.cols()) + " columns but " +
                        std::to_string(vertex_count()) + " labels");
    }
    critical_ = normal_critical_value(config_.significance);
  }

  std::size_t sample_size() const noexcept { return n_; }
  double critical_value() const noexcept { return critical_; }
  const Eigen::MatrixXd& covariance() const noexcept { return covariance_; }

 protected:
  bool test(Vertex a, Vertex b, const VertexSet& s) const override {
    if (n_ <= s.size() + 3) {
      throw DomainError("insufficient samples for conditioning order " + std::to_string(s.size()));
    }
    const double r = partial_correlation(covariance_, a, b, s);
    return fisher_z_statistic(r, n_, s.size()) <= critical_;
  }

 private:
  std::size_t n_;
  Eigen::MatrixXd covariance_;
  TestConfig config_;
  double critical_ = 0.0;
};

}  // namespace lowcond
