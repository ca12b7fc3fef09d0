#pragma once

<optional>
#include <map>
#include <optional>
#include <vector>

#include "framekit/numerics.hpp"
#include "framekit/types.hpp"

namespace framekit {

// Ordered sequence of k vectors in an n-dimensional real or complex space.
// The sequence need not span; is_frame() decides that.
struct Frame {
  Frame(Field field, int dim, std::vector<Vec> vecs);

  int k() const { return static_cast<int>(vectors.size()); }

  Field field = Field::Real;
  int n = 0;
  std::vector<Vec> vectors;
};

// The k diagram vectors of a frame together with their Gramian.
struct DiagramSystem {
  std::vector<Vec> diagram_vectors;
  Mat diagram_gramian;
};

enum class TightnessCondition {
  Direct,          // S == lambda * I
  RankAndGramSq,   // rank(G) == n and G^2 == lambda * G
  Spectrum,        // sigma(G) == (lambda x n, 0 x (k - n))
  DiagramSum,      // sum of diagram vectors == 0
  OnesInNull,      // all-ones vector in null(diagram Gramian)
};

const char* tightness_condition_id(TightnessCondition c);

struct TightnessReport {
  bool is_tight = false;
  std::optional<double> lambda;  // trace(S)/n, present iff tight
  std::map<TightnessCondition, bool> per_condition;
};

/// k x n matrix whose i-th row is the conjugate transpose of f_i.
Mat analysis_operator(const Frame& f);

/// n x k matrix whose i-th column is f_i; the adjoint of the analysis
/// operator.
Mat synthesis_operator(const Frame& f);

/// S = synthesis * analysis = sum_i f_i f_i^*; Hermitian PSD.
Mat frame_operator(const Frame& f);

/// G = analysis * synthesis; G[i][j] = <f_j, f_i>.
Mat gramian(const Frame& f);

bool is_frame(const Frame& f, Tolerance tol = {});
bool is_unit_norm(const Frame& f, Tolerance tol = {});

/// lambda candidate trace(S)/n used by all tightness conditions.
double tight_lambda_candidate(const Frame& f);

/// Diagram vector of f: length n(n-1) over the reals, 3n(n-1)/2 over the
/// complex numbers. Requires n >= 2.
Vec diagram_vector(const Vec& f, Field field);

DiagramSystem diagram_system(const Frame& f);

/// Evaluate one tightness condition. Requires at least one nonzero vector;
/// the diagram-based conditions additionally require n >= 2.
bool check_tight(const Frame& f, TightnessCondition condition,
                 Tolerance tol = {});

/// Evaluate every condition available at this dimension (Direct only when
/// n == 1, all five otherwise). is_tight is the Direct verdict.
TightnessReport tightness_report(const Frame& f, Tolerance tol = {});

}  // namespace framekit
