#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "atiyah/errors.hpp"

namespace atiyah {

// E_0..E_m by the stable ascending recurrence. Empty input yields {1}.
// Matches brute-force subset sums.
std::vector<double> elementary_symmetric(std::span<const double> vals);

// Elementary symmetric tables for one lambda list:
//   E       of lambda_1..lambda_m            (E_0..E_m)
//   E_tilde of 1, lambda_1..lambda_m         (E~_0..E~_{m+1})
//   E_sq    of lambda_1^2..lambda_m^2        (E2_0..E2_m)
// For positive lambdas all entries are positive, E_0 = E~_0 = E2_0 = 1, and
// sum_k E2_k = prod_i (1 + lambda_i^2).
struct SymmetricTables {
    std::vector<double> lambdas;
    std::vector<double> E;
    std::vector<double> E_tilde;
    std::vector<double> E_sq;

    static SymmetricTables compute(std::span<const double> lambdas);
};

// det of the banded coefficient matrix of the dehomogenized case-A
// polynomials:
//   1 + l_m E_1 + l_{m-1} l_m E_2 + ... + l_1...l_m E_m.
// Term k multiplies E_k by the product of the k largest lambdas. Requires
// ascending positive input (ties allowed); always positive.
double case_a_det(std::span<const double> lambdas);

struct CaseBDet {
    double p = 0.0;  // 1 + l_m^2 E~_2 + l_{m-2}^2 l_m^2 E~_4 + ...
    double q = 0.0;  // E~_1 + l_{m-1}^2 E~_3 + l_{m-3}^2 l_{m-1}^2 E~_5 + ...
    double det = 0.0;  // 2*p*q
};

// det of the case-B coefficient matrix, factored as 2pq. The p and q series
// truncate once their lambda index would drop below 1. All parts positive.
CaseBDet case_b_det(std::span<const double> lambdas);

struct CaseAInequality {
    double lhs = 0.0;  // case_a_det
    double rhs = 0.0;  // prod (1 + lambda_i^2)
    bool holds = false;
    // termwise[k]: (product of k largest lambdas) * E_k >= E2_k
    std::vector<bool> termwise;
};

// The case-A bound inequality and its term-by-term refinement. For ascending
// positive input every termwise entry holds, which forces lhs >= rhs.
CaseAInequality case_a_inequality(std::span<const double> lambdas);

struct CaseBProbe {
    double lhs = 0.0;    // p*q
    double rhs = 0.0;    // prod (1 + lambda_i^2)^2
    double slack = 0.0;  // lhs / rhs
};

// Numeric probe of the open case-B inequality p*q >= prod(1+lambda_i^2)^2.
// Nothing is asserted here; callers record the observed slack. At m = 1 the
// slack is exactly 1 + lambda*(lambda-1)^2/(1+lambda^2)^2.
CaseBProbe case_b_inequality_probe(std::span<const double> lambdas);

struct SpecializedIdentity {
    // sum_k C(m, 2k+1) * (lam^(4k+3) - lam^(4k+2))
    double sum_lhs = 0.0;
    // (lam - 1) * ((1 + lam^2)^m - (1 - lam^2)^m) / 2
    double closed_rhs = 0.0;
    // the two brackets of the equal-lambda product inequality and its rhs
    double product_lhs = 0.0;  // p(lam) * q(lam)
    double product_rhs = 0.0;  // (1 + lam^2)^(2m)
    bool product_holds = false;
};

// The equal-lambda specialization: both sides of the binomial identity plus
// the specialized product inequality. Internally evaluated in extended
// precision so the returned sides agree to relative 1e-12 wherever the
// identity holds.
SpecializedIdentity specialized_identity(int m, double lam);

// Mixed line-pair setup: positions a_i on L, b_j on M, and the table
// lambda_ij = a_i + sqrt(a_i^2 + b_j^2). This lambda is the cross-pair one,
// distinct from the pairwise lambda in PairData.
struct CaseParams {
    std::vector<double> a;       // strictly ascending
    std::vector<double> b;       // strictly ascending, nonzero
    std::vector<double> lambda;  // row-major m x n, all > 0

    static CaseParams create(std::vector<double> a, std::vector<double> b);

    double lambda_at(std::size_t i, std::size_t j) const {
        return lambda[i * b.size() + j];
    }
};

}  // namespace atiyah
