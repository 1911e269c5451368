#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "atiyah/geometry.hpp"

namespace atiyah {

struct ComplexMatrix {
    std::size_t n = 0;
    std::vector<Complex> data;  // row-major, n*n

    static ComplexMatrix zero(std::size_t n) {
        return {n, std::vector<Complex>(n * n)};
    }

    Complex& at(std::size_t r, std::size_t c) { return data[r * n + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

// exp(log_abs) * phase reconstructs the determinant. Exactly singular input
// yields log_abs = -infinity, phase = 1.
struct LogDet {
    double log_abs = 0.0;
    Complex phase{1.0, 0.0};
};

// Row i holds the coefficients of prod_{j != i} l_ij where l_ij is the form
// of the direction from point i toward point j under the policy.
ComplexMatrix build_matrix(const Configuration& c, const OrientationPolicy& policy);

// Same matrix with each pair's forward form scaled by the pair's unit phase u
// and the backward form by conj(u); the determinant is unchanged when every
// |u| == 1. One phase per pair, indexed by pair_index.
ComplexMatrix build_matrix_phased(const Configuration& c,
                                  const OrientationPolicy& policy,
                                  std::span<const Complex> pair_phase);

// LU with partial pivoting, magnitudes accumulated in log space.
LogDet log_determinant(ComplexMatrix m);

// Sum over unordered pairs of log(lambda^2 + |delta_z|^2), lambda taken along
// the policy's forward direction. Equals sum of log(2*lambda*r).
double rhs_log_bound(const Configuration& c, const OrientationPolicy& policy);

// Translates point 0 to the origin and rescales to unit diameter. The ratio
// of |det P| to the bound is invariant under both operations.
Configuration gauge_fix(const Configuration& c);

struct AtiyahEvaluation {
    std::size_t n = 0;
    double log_abs_det = 0.0;   // of the gauge-fixed configuration
    Complex det_phase{1.0, 0.0};
    double log_rhs = 0.0;       // of the gauge-fixed configuration
    double ratio = 0.0;         // exp(log_abs_det - log_rhs), gauge-invariant
    bool independent = false;   // ratio > tol
    OrientationPolicy orientation;
};

// The conjectured lower bound for ratio is 1; collinear configurations sit
// exactly at 1. independent = (ratio > tol).
AtiyahEvaluation evaluate(const Configuration& c,
                          const OrientationPolicy& policy = {},
                          double tol = 1e-8);

}  // namespace atiyah
