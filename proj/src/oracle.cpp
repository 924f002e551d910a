#include "dressed/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dressed/errors.hpp"

namespace dressed {

QuadraticForm build_form(const DressedAtomParams& params) {
  const std::size_t n = params.n_modes();
  const auto size = static_cast<Eigen::Index>(n + 1);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(size, size);
  b(0, 0) = params.omega_bar() * params.omega_bar() + static_cast<double>(n) * params.eta_sq();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    const double omega_k = params.field_frequency(k);
    b(i, i) = omega_k * omega_k;
    b(0, i) = b(i, 0) = -params.eta() * omega_k;
  }
  return {params, std::move(b)};
}

SymmetricEigen jacobi_eigensolve(Eigen::MatrixXd a, const JacobiConfig& config) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InvalidArgument("jacobi_eigensolve needs a square matrix");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  int sweep = 0;
  for (; sweep < config.max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::fabs(apq) <= eps * std::sqrt(std::fabs(app) * std::fabs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        // Rutishauser's rotation: t = tan(theta) chosen as the smaller root.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    if (!rotated) break;
  }
  if (sweep == config.max_sweeps) throw ConvergenceFailure("Jacobi eigensolve hit the sweep cap", 0);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n), sweep + 1};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

Decomposition::Decomposition(DressedAtomParams params, Eigen::VectorXd eigenvalues, Eigen::MatrixXd vectors)
    : params_(std::move(params)), eigenvalues_(std::move(eigenvalues)), vectors_(std::move(vectors)) {}

ModeSpectrum Decomposition::spectrum() const {
  std::vector<double> gaps(static_cast<std::size_t>(eigenvalues_.size()));
  for (std::size_t r = 0; r < gaps.size(); ++r) {
    gaps[r] = std::sqrt(eigenvalues_(static_cast<Eigen::Index>(r))) -
              static_cast<double>(r) * params_.delta_omega();
  }
  return ModeSpectrum(params_, std::move(gaps), SpectrumMethod::oracle);
}

Decomposition diagonalize(const QuadraticForm& form, const JacobiConfig& config) {
  auto eig = jacobi_eigensolve(form.matrix, config);
  const Eigen::Index n = eig.values.size();
  const double norm = form.matrix.norm();
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!(eig.values(r) > 0.0)) {
      throw DomainError("quadratic form has a non-positive eigenvalue; no stationary configuration");
    }
    if (eig.vectors(0, r) < 0.0) eig.vectors.col(r) *= -1.0;
    const double residual = (form.matrix * eig.vectors.col(r) - eig.values(r) * eig.vectors.col(r)).norm();
    if (residual > 1e-10 * norm) {
      throw ConvergenceFailure("oracle eigenpair residual " + std::to_string(residual) + " too large",
                               static_cast<std::size_t>(r));
    }
  }
  return Decomposition(form.params, std::move(eig.values), std::move(eig.vectors));
}

std::complex<double> oracle_amplitude(const Decomposition& decomp, Oscillator mu, Oscillator nu, double t) {
  const auto& v = decomp.vectors();
  const auto m = static_cast<Eigen::Index>(mu.index());
  const auto k = static_cast<Eigen::Index>(nu.index());
  if (m >= v.rows() || k >= v.rows()) throw InvalidArgument("oscillator index outside the oracle system");
  std::complex<double> sum = 0.0;
  for (Eigen::Index s = 0; s < v.cols(); ++s) {
    const double omega = std::sqrt(decomp.eigenvalues()(s));
    sum += v(m, s) * v(k, s) * std::complex<double>(std::cos(omega * t), -std::sin(omega * t));
  }
  return sum;
}

}  // namespace dressed
