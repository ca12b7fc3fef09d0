#include "framekit/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace framekit {

namespace {

double singular_threshold(const Eigen::VectorXd& sv, Eigen::Index rows,
                          Eigen::Index cols, Tolerance tol) {
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double dim = static_cast<double>(std::max(rows, cols));
  return std::max(tol.rel_eps * smax * dim, tol.abs_floor);
}

void require_nonempty(const Mat& m, const char* op) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionError(std::string(op) + ": empty matrix");
  }
}

// Multiply by a unit phase so the first coordinate above rel_eps is a
// positive real. Keeps orthonormal sets orthonormal.
void canonical_phase(Vec& v, Tolerance tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > std::max(tol.rel_eps * v.norm(), tol.abs_floor)) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

Mat stack_rows(const std::vector<Vec>& vectors, int n) {
  Mat m(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) {
      throw DimensionError("vector length does not match ambient dimension");
    }
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return m;
}

}  // namespace

int rank(const Mat& m, Tolerance tol) {
  require_nonempty(m, "rank");
  Eigen::JacobiSVD<Mat> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = singular_threshold(sv, m.rows(), m.cols(), tol);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++r;
  }
  return r;
}

std::vector<Vec> null_space_basis(const Mat& m, Tolerance tol) {
  require_nonempty(m, "null_space_basis");
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = singular_threshold(sv, m.rows(), m.cols(), tol);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++r;
  }
  std::vector<Vec> basis;
  basis.reserve(static_cast<std::size_t>(m.cols() - r));
  for (Eigen::Index j = r; j < m.cols(); ++j) {
    Vec v = svd.matrixV().col(j);
    canonical_phase(v, tol);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool spans(const std::vector<Vec>& vectors, int n, Tolerance tol) {
  if (n <= 0) throw DimensionError("spans: dimension must be positive");
  if (vectors.empty()) return false;
  return rank(stack_rows(vectors, n), tol) == n;
}

std::vector<Vec> orthogonal_complement_basis(const std::vector<Vec>& vectors,
                                             int n, Tolerance tol) {
  if (n <= 0) {
    throw DimensionError("orthogonal_complement_basis: dimension must be positive");
  }
  if (vectors.empty()) {
    std::vector<Vec> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) basis.push_back(Vec::Unit(n, i));
    return basis;
  }
  // y is orthogonal to every v_i exactly when the analysis-style stack of
  // conjugated rows annihilates it.
  Mat m(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) {
      throw DimensionError("vector length does not match ambient dimension");
    }
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].adjoint();
  }
  return null_space_basis(m, tol);
}

std::vector<double> hermitian_eigenvalues(const Mat& m, Tolerance tol) {
  require_nonempty(m, "hermitian_eigenvalues");
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eigenvalues: matrix must be square");
  }
  const double deviation = (m - m.adjoint()).norm();
  if (deviation > std::max(tol.rel_eps * m.norm(), tol.abs_floor)) {
    throw ContractViolation("hermitian_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_orthonormal(const std::vector<Vec>& vectors, Tolerance tol) {
  const double thr = std::max(16.0 * tol.rel_eps, tol.abs_floor);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      if (vectors[i].size() != vectors[j].size()) return false;
      const Complex g = vectors[i].dot(vectors[j]);
      const double target = i == j ? 1.0 : 0.0;
      if (std::abs(g - Complex(target, 0.0)) > thr) return false;
    }
  }
  return true;
}

Vec project(const std::vector<Vec>& onto_basis, const Vec& x, Tolerance tol) {
  if (!is_orthonormal(onto_basis, tol)) {
    throw ContractViolation("project: basis is not orthonormal");
  }
  Vec result = Vec::Zero(x.size());
  for (const Vec& b : onto_basis) {
    if (b.size() != x.size()) {
      throw DimensionError("project: basis/vector dimension mismatch");
    }
    result += b.dot(x) * b;  // b.dot(x) == <x, b>
  }
  return result;
}

std::vector<Vec> orthonormal_span_basis(const std::vector<Vec>& vectors,
                                        int n, Tolerance tol) {
  if (vectors.empty()) return {};
  Mat m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) {
      throw DimensionError("vector length does not match ambient dimension");
    }
    m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double thr = singular_threshold(sv, m.rows(), m.cols(), tol);
  std::vector<Vec> basis;
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(j) > thr) {
      Vec u = svd.matrixU().col(j);
      canonical_phase(u, tol);
      basis.push_back(std::move(u));
    }
  }
  return basis;
}

bool in_span(const std::vector<Vec>& orthonormal, const Vec& f, Tolerance tol) {
  Vec residual = f;
  for (const Vec& b : orthonormal) residual -= b.dot(f) * b;
  return residual.norm() <= std::max(tol.rel_eps * f.norm(), tol.abs_floor);
}

bool SpanAccumulator::push(const Vec& f) {
  Vec w = f;
  // Two MGS passes keep the residual orthogonal to working precision.
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vec& b : basis_) w -= b.dot(w) * b;
  }
  if (w.norm() > std::max(tol_.rel_eps * f.norm(), tol_.abs_floor)) {
    basis_.push_back(w / w.norm());
    return true;
  }
  return false;
}

void SpanAccumulator::pop() { basis_.pop_back(); }

}  // namespace framekit
