#pragma once

// The graded ring R = F_p[X,Y,Z]/(Z^d - P(X,Y)) of a plane curve that is a
// cyclic cover of the projective line, with canonical monomial bases.
//
// In degree m the canonical basis is X^i Y^j Z^k with i + j + k = m and
// 0 <= k <= d-1, ordered by k ascending, then i ascending. Because Z^d
// rewrites to P(X,Y), every element is uniquely a sum of "levels"
// F_k(X,Y) Z^k with F_k a binary form of degree m - k.

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "frobper/binary_form.hpp"
#include "frobper/ff_linalg.hpp"

namespace frobper {

struct Monomial {
    int x = 0;
    int y = 0;
    int z = 0;

    int degree() const noexcept { return x + y + z; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class CurveRing {
public:
    // Fermat curve X^d + Y^d - Z^d = 0.
    CurveRing(Prime p, int d);
    // Z^d = P(X,Y) with deg P = d. Throws std::invalid_argument when the
    // curve is singular (p | d, or P has a repeated linear factor).
    CurveRing(Prime p, BinaryForm relation);

    Prime prime() const noexcept { return state_->p; }
    int degree() const noexcept { return state_->d; }
    int genus() const noexcept { return (degree() - 1) * (degree() - 2) / 2; }
    const BinaryForm& relation() const noexcept { return state_->relation; }
    bool is_fermat() const;

    // Memoized; the reference stays valid for the ring's lifetime.
    const std::vector<Monomial>& monomial_basis(int m) const;
    std::size_t hilbert_dim(int m) const noexcept;
    // Position of a reduced monomial (z < d) in the basis of its degree.
    std::size_t index_of(const Monomial& mono) const noexcept;

    // P^n, memoized.
    const BinaryForm& relation_power(int n) const;

    // Two handles are equal when they share state or describe the same curve.
    friend bool operator==(const CurveRing& a, const CurveRing& b) noexcept {
        return a.state_ == b.state_ || (a.state_->p == b.state_->p && a.state_->relation == b.state_->relation);
    }

private:
    struct State {
        State(Prime prime, int deg, BinaryForm rel) : p(prime), d(deg), relation(std::move(rel)) {}
        Prime p;
        int d;
        BinaryForm relation;
        mutable std::shared_mutex mutex;
        mutable std::map<int, std::vector<Monomial>> bases;
        mutable std::map<int, BinaryForm> powers;
    };
    std::shared_ptr<const State> state_;
};

// A homogeneous element of R as coefficients over the canonical basis of its
// degree. Negative degrees hold the zero space (no coefficients).
class GradedElement {
public:
    GradedElement(CurveRing ring, int degree);
    GradedElement(CurveRing ring, int degree, std::vector<residue> coeffs);

    // Level-0 element given by a binary form.
    static GradedElement from_form(const CurveRing& ring, const BinaryForm& f);
    // Element with the given level forms; levels[k] must have degree m - k.
    static GradedElement from_levels(const CurveRing& ring, int degree, const std::vector<BinaryForm>& levels);

    const CurveRing& ring() const noexcept { return ring_; }
    int degree() const noexcept { return degree_; }
    const std::vector<residue>& coeffs() const noexcept { return coeffs_; }
    residue coeff(const Monomial& mono) const noexcept { return coeffs_[ring_.index_of(mono)]; }

    int num_levels() const noexcept;
    BinaryForm level(int k) const;

    bool is_zero() const noexcept;
    GradedElement operator+(const GradedElement& rhs) const;
    GradedElement operator-(const GradedElement& rhs) const;
    GradedElement operator*(const GradedElement& rhs) const;
    GradedElement scaled(residue c) const;
    GradedElement negated() const;

    residue evaluate(residue x, residue y, residue z) const noexcept;

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_ && a.ring_ == b.ring_;
    }

private:
    CurveRing ring_;
    int degree_;
    std::vector<residue> coeffs_;
};

// Canonical representative of X^i Y^j Z^k, rewriting Z^d -> P(X,Y).
GradedElement reduce_monomial(const CurveRing& ring, const Monomial& mono);

GradedElement x_power(const CurveRing& ring, int a);
GradedElement y_power(const CurveRing& ring, int a);
GradedElement z_power(const CurveRing& ring, int a);

// Matrix of R_m -> R_{m + deg f}, g -> f g. Column j is the image of the
// j-th basis monomial of degree m.
FpMatrix mult_map(const CurveRing& ring, const GradedElement& f, int m);

// Sections of O_C(k): dim R_k (zero for k < 0).
std::size_t h0_line_bundle(const CurveRing& ring, int k) noexcept;

}  // namespace frobper
