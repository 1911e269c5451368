#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "atiyah/binary_forms.hpp"
#include "atiyah/errors.hpp"

namespace atiyah {

// A point of R x C: real height a plus complex planar coordinate z.
struct Point {
    double a = 0.0;
    Complex z{};

    friend bool operator==(const Point&, const Point&) = default;
};

// Ordered tuple of at least two pairwise-distinct points. Distinctness is
// exact comparison on the stored values; geometric tolerance is the caller's
// concern.
struct Configuration {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }

    // Throws std::invalid_argument (N < 2, non-finite coordinate) or
    // CoincidentPoints.
    void validate() const;
};

// A lift (z, w) under the Hopf map; never both zero.
struct Spinor {
    Complex z{}, w{};
};

std::size_t pair_count(std::size_t n);
// Upper-triangle index of the unordered pair {i, j}, i < j, among n points.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

// Which direction of each unordered pair gets the standard lift.
//
// Canonical: forward runs from the lower to the higher storage index, except
// that a vertical pair (delta_z exactly zero) descending in height flips so
// that lambda stays positive.
//
// Explicit: caller supplies one flag per pair, indexed by pair_index; a flag
// whose direction has lambda == 0 makes pair_data throw DegenerateLift.
struct OrientationPolicy {
    enum class Kind { Canonical, Explicit };

    Kind kind = Kind::Canonical;
    std::vector<bool> forward_flags;  // Explicit only

    static OrientationPolicy canonical() { return {}; }
    static OrientationPolicy explicit_flags(std::vector<bool> flags) {
        return {Kind::Explicit, std::move(flags)};
    }
};

// Direction data and the two unnormalized linear forms of one pair. All of
// lambda, delta_z, r refer to the forward direction; 2*lambda*r equals
// lambda^2 + |delta_z|^2.
struct PairData {
    std::size_t i = 0, j = 0;  // i < j by storage convention
    bool forward = true;       // true: forward direction is points[j] - points[i]
    double lambda = 0.0;       // delta_a + r along the forward direction, > 0
    Complex delta_z{};         // z-step along the forward direction
    double r = 0.0;            // Euclidean distance
    LinearForm form_fwd{};     // lambda*x + conj(delta_z)*y
    LinearForm form_bwd{};     // -delta_z*x + lambda*y

    // Form of the direction leaving point `from` toward the pair's other point.
    const LinearForm& form_from(std::size_t from) const {
        return (from == i) == forward ? form_fwd : form_bwd;
    }
};

// h(z, w) = ((|z|^2 - |w|^2)/2, z*conj(w)). Fibers are unit-phase circles.
Point hopf(const Spinor& s);

// lambda^(-1/2) * (lambda, conj(v)) with lambda = a + sqrt(a^2 + |v|^2).
// Throws DegenerateLift when lambda == 0 (v == 0, a < 0): lift the reversed
// vector and apply reverse_lift instead.
Spinor standard_lift(double a, Complex v);

// (z, w) -> (-conj(w), conj(z)); lifts the opposite vector.
Spinor reverse_lift(const Spinor& s);

// Resolves the pair's orientation under the policy and builds its forms.
// Accepts i, j in either order. Throws CoincidentPoints, DegenerateLift.
PairData pair_data(const Configuration& c, std::size_t i, std::size_t j,
                   const OrientationPolicy& policy);

// The forward flag pair_data would resolve for every pair, as explicit flags.
std::vector<bool> resolve_forward_flags(const Configuration& c,
                                        const OrientationPolicy& policy);

}  // namespace atiyah
