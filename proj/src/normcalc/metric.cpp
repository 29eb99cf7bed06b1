#include "normpow/error.hpp"
#include "normpow/normcalc.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace normpow {

Metric::Metric(const Matrix& b) {
  if (b.rows() != b.cols() || b.rows() == 0) {
    throw DimensionMismatch("metric matrix must be square and non-empty, got " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (!b.allFinite()) throw NotPositiveDefinite("metric matrix has non-finite entries");

  const double scale = b.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < b.cols(); ++j) {
      if (std::abs(b(i, j) - b(j, i)) > 1e-12 * scale) {
        std::ostringstream os;
        os << "metric matrix not symmetric at (" << i << ", " << j << "): " << b(i, j)
           << " vs " << b(j, i);
        throw NotSymmetric(os.str());
      }
    }
  }
  b_ = 0.5 * (b + b.transpose());

  llt_.compute(b_);
  if (llt_.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(b_);
    Eigen::Index k = 0;
    const double lambda = eig.eigenvalues().minCoeff(&k);
    std::ostringstream os;
    os << "metric matrix not positive definite: eigenvalue " << lambda << " along direction ["
       << eig.eigenvectors().col(k).transpose() << "]";
    throw NotPositiveDefinite(os.str());
  }
  chol_ = llt_.matrixL();
}

Metric Metric::identity(int dim) { return Metric(Matrix::Identity(dim, dim)); }

double Metric::inner(const Vector& x, const Vector& y) const {
  if (x.size() != b_.rows() || y.size() != b_.rows()) {
    throw DimensionMismatch("vector dimension does not match the metric (" +
                            std::to_string(b_.rows()) + ")");
  }
  return x.dot(b_ * y);
}

double Metric::norm(const Vector& x) const { return std::sqrt(std::max(0.0, inner(x, x))); }

Vector Metric::from_whitened(const Vector& u) const { return llt_.matrixU().solve(u); }

Metric make_metric(const Matrix& entries) { return Metric(entries); }

Metric make_metric(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw DimensionMismatch("metric matrix must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return Metric(m);
}

}  // namespace normpow
