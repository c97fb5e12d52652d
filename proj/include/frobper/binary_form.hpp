#pragma once

// Homogeneous polynomials in two variables over F_p.

#include <cstdint>
#include <string>
#include <vector>

#include "frobper/ff_linalg.hpp"

namespace frobper {

// A binary form of fixed degree n. coeffs[i] is the coefficient of
// X^i Y^(n-i); the zero form of any degree is allowed.
class BinaryForm {
public:
    BinaryForm(Prime p, int degree);
    BinaryForm(Prime p, std::vector<std::int64_t> coeffs);

    static BinaryForm monomial(Prime p, int x_exp, int y_exp, residue c = 1);
    // X^d + Y^d
    static BinaryForm fermat(Prime p, int d);

    Prime modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    residue coeff(int x_exp) const noexcept { return coeffs_[static_cast<std::size_t>(x_exp)]; }
    const std::vector<residue>& coeffs() const noexcept { return coeffs_; }
    void set_coeff(int x_exp, std::int64_t c) noexcept;

    bool is_zero() const noexcept;

    BinaryForm operator+(const BinaryForm& rhs) const;
    BinaryForm operator-(const BinaryForm& rhs) const;
    BinaryForm operator*(const BinaryForm& rhs) const;
    BinaryForm scaled(residue c) const;
    BinaryForm pow(int n) const;

    BinaryForm d_dx() const;
    BinaryForm d_dy() const;

    // f(X^k, Y^k), of degree k * deg f.
    BinaryForm inflate(int k) const;

    // Multiplicity of the factor Y (number of leading zero X-coefficients
    // counting from the top), and likewise for X. Undefined for zero forms.
    int y_valuation() const noexcept;
    int x_valuation() const noexcept;

    residue evaluate(residue x, residue y) const noexcept;

    // True iff only exponents divisible by k occur in X (and hence in Y).
    bool is_in_powers(int k) const noexcept;

    std::string to_string(char x = 'X', char y = 'Y') const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    Prime p_;
    std::vector<residue> coeffs_;
};

// Greatest common divisor of two binary forms, up to a nonzero scalar.
// The result is normalized so that its coefficient with the largest X power
// equals 1; it is the constant 1 exactly when the forms share no projective
// root over the algebraic closure. Throws std::invalid_argument when both
// inputs are zero ("undefined gcd").
BinaryForm polynomial_gcd(const BinaryForm& f, const BinaryForm& g);

// Scale so that the highest nonzero X-coefficient is 1.
BinaryForm normalized(const BinaryForm& f);

}  // namespace frobper
