#pragma once

// Hilbert-Kunz function of R = F_p[X,Y,Z]/(Z^d - P(X,Y)): colengths of the
// Frobenius powers (X^q, Y^q, Z^q), closed formulas for Fermat rings, and
// the verdict derived from comparing the two.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "frobper/graded_ring.hpp"

namespace frobper {

using Rational = boost::rational<std::int64_t>;

std::int64_t int_pow(std::int64_t base, int exp);

struct HKRecord {
    int e = 0;
    std::int64_t q = 1;
    // dim (R / m^[q])_m for m = 0, 1, ... up to and including the first zero.
    std::vector<std::size_t> profile;
    std::int64_t total = 0;
};

enum class HKVerdict { matches_closed_formula, deviates, inconclusive };
std::string to_string(HKVerdict v);

struct HKSummary {
    int d = 0;
    residue p = 0;
    std::vector<HKRecord> records;
    std::vector<Rational> ehk_estimates;            // phi(e) / q^2
    std::vector<std::optional<Rational>> formula;   // closed formula when in range
    std::vector<Rational> balanced_value;           // (3d/4) q^2 + 1 - 3d/4
    HKVerdict verdict = HKVerdict::inconclusive;
};

// Colength in a single degree: dim R_m - rank of the stacked map
// R_{m-q}^3 -> R_m given by (X^q, Y^q, Z^q).
std::size_t colength_at(const CurveRing& ring, std::int64_t q, int m);

// Per-degree colengths, stopping at the first zero entry. Degrees are
// evaluated in parallel batches; a hard cap at 3q + 3d guards termination.
std::vector<std::size_t> colength_profile(const CurveRing& ring, std::int64_t q);

// Reference: every degree up to the hard cap, serially, no early exit.
std::vector<std::size_t> colength_profile_exhaustive(const CurveRing& ring, std::int64_t q);

HKRecord hk_record(const CurveRing& ring, int e);
std::int64_t hk_value(const CurveRing& ring, int e);

bool fermat_periodic_characteristic(int d, std::int64_t p) noexcept;  // p = -1 mod 2d

// (3d/4) p^{2e} + 1 - 3d/4; requires p = -1 mod 2d, else std::domain_error
// "formula out of range".
Rational hk_closed_formula(int d, std::int64_t p, int e);
// Same expression without a precondition.
Rational balanced_hk_value(int d, std::int64_t p, int e);

// (9/4) p^{2e} - 5/4 for odd p.
Rational elliptic_formula(std::int64_t p, int e);

// Hilbert-Kunz multiplicity for the deviating congruence classes:
// d even, p = d +- 1 mod 2d:  3d/4 + (d(d-3))^2 / (4 d p^2);
// d odd,  p = d mod 2d:       3d/4 + d^3 / (4 p^2).
Rational monsky_deviation_formula(int d, std::int64_t p);

HKSummary strong_semistability_verdict(const CurveRing& ring, int e_max);

struct StarIdentityCheck {
    int m = 0;
    std::size_t colength = 0;   // rank route
    std::size_t h0_m = 0;
    std::size_t h0_shifted = 0;  // h0(m - q)
    std::size_t sections = 0;    // kernel route
    bool holds = false;
};

// colength(m) == h0(m) - 3 h0(m - q) + h0(Syz(X^q,Y^q,Z^q)(m)), with the
// colength from a rank and the section count from an explicit kernel basis.
StarIdentityCheck star_identity(const CurveRing& ring, std::int64_t q, int m);
bool crosscheck_star_identity(const CurveRing& ring, std::int64_t q, int m);

}  // namespace frobper
