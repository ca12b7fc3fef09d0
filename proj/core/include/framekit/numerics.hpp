#pragma once

#include <vector>

#include "framekit/types.hpp"

namespace framekit {

// Tolerance-aware dense linear algebra kernel. All functions are pure and
// safe to call concurrently.

/// Numerical rank: singular values above
/// max(rel_eps * sigma_max * max(rows, cols), abs_floor).
int rank(const Mat& m, Tolerance tol = {});

/// Orthonormal basis of the numerical null space (cols - rank vectors),
/// each vector phase-normalized so its first nonzero coordinate is a
/// positive real.
std::vector<Vec> null_space_basis(const Mat& m, Tolerance tol = {});

/// True iff the vectors span the full n-dimensional space.
bool spans(const std::vector<Vec>& vectors, int n, Tolerance tol = {});

/// Orthonormal basis of the orthogonal complement of span(vectors) in
/// dimension n. Empty input yields the standard basis.
std::vector<Vec> orthogonal_complement_basis(const std::vector<Vec>& vectors,
                                             int n, Tolerance tol = {});

/// Eigenvalues of a Hermitian matrix, sorted descending. Rejects
/// non-Hermitian input. Uses a self-adjoint solver, never a general one.
std::vector<double> hermitian_eigenvalues(const Mat& m, Tolerance tol = {});

/// Orthogonal projection of x onto the span of an orthonormal basis:
/// sum_i <x, b_i> b_i. Rejects non-orthonormal bases.
Vec project(const std::vector<Vec>& onto_basis, const Vec& x,
            Tolerance tol = {});

/// Orthonormal basis of span(vectors) (dimension = rank of the stack).
std::vector<Vec> orthonormal_span_basis(const std::vector<Vec>& vectors,
                                        int n, Tolerance tol = {});

/// Whether f lies in the span of an orthonormal basis, relative to ||f||.
bool in_span(const std::vector<Vec>& orthonormal, const Vec& f,
             Tolerance tol = {});

/// Pairwise-orthonormality test used by project() and the projection ops.
bool is_orthonormal(const std::vector<Vec>& vectors, Tolerance tol = {});

// Incrementally orthonormalized basis for subset-enumeration spanning tests.
// push() returns true when the vector enlarged the span; pop() undoes the
// most recent enlarging push.
class SpanAccumulator {
 public:
  explicit SpanAccumulator(Tolerance tol = {}) : tol_(tol) {}

  int rank() const { return static_cast<int>(basis_.size()); }
  bool push(const Vec& f);
  void pop();

 private:
  Tolerance tol_;
  std::vector<Vec> basis_;
};

}  // namespace framekit
