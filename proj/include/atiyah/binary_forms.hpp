#pragma once

#include <complex>
#include <span>
#include <vector>

namespace atiyah {

using Complex = std::complex<double>;

// Degree-1 form u*x + v*y.
struct LinearForm {
    Complex u{}, v{};
};

// Homogeneous polynomial in x, y of degree coeffs.size()-1.
// coeffs[k] holds the coefficient of x^(d-k) * y^k, so after setting x = 1
// the index k is the coefficient of y^k.
struct BinaryForm {
    std::vector<Complex> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    static BinaryForm one() { return {{Complex{1.0, 0.0}}}; }
    static BinaryForm from_linear(const LinearForm& f) { return {{f.u, f.v}}; }
};

// Coefficient convolution; degree adds.
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

// Left fold of multiply over the sequence. Degree equals forms.size().
BinaryForm product_of_linear_forms(std::span<const LinearForm> forms);

}  // namespace atiyah
