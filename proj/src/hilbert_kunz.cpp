#include "frobper/hilbert_kunz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frobper/syzygy.hpp"

namespace frobper {

std::int64_t int_pow(std::int64_t base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string to_string(HKVerdict v) {
    switch (v) {
        case HKVerdict::matches_closed_formula: return "matches-closed-formula";
        case HKVerdict::deviates: return "deviates";
        case HKVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

int to_degree(std::int64_t q) {
    if (q < 1 || q > (std::int64_t{1} << 20)) throw std::invalid_argument("q out of range");
    return static_cast<int>(q);
}

int hard_cap(const CurveRing& ring, std::int64_t q) { return 3 * to_degree(q) + 3 * ring.degree(); }

GeneratorList frobenius_power(const CurveRing& ring, std::int64_t q) {
    const int a = to_degree(q);
    return GeneratorList::monomial_powers(ring, a, a, a);
}

}  // namespace

std::size_t colength_at(const CurveRing& ring, std::int64_t q, int m) {
    if (m < 0) return 0;
    if (m < q) return ring.hilbert_dim(m);
    return ring.hilbert_dim(m) - rank(syzygy_matrix(frobenius_power(ring, q), m));
}

std::vector<std::size_t> colength_profile(const CurveRing& ring, std::int64_t q) {
    const int cap = hard_cap(ring, q);
    std::vector<std::size_t> profile;
    int m = 0;
    for (; m < q; ++m) profile.push_back(ring.hilbert_dim(m));

#ifdef _OPENMP
    const int batch = std::max(1, 2 * omp_get_max_threads());
#else
    const int batch = 1;
#endif
    const GeneratorList gens = frobenius_power(ring, q);
    while (m <= cap) {
        const int hi = std::min(cap, m + batch - 1);
        for (int k = m; k <= hi; ++k) ring.monomial_basis(k);
        std::vector<std::size_t> chunk(static_cast<std::size_t>(hi - m + 1));
#pragma omp parallel for schedule(dynamic)
        for (int k = m; k <= hi; ++k)
            chunk[static_cast<std::size_t>(k - m)] = ring.hilbert_dim(k) - rank(syzygy_matrix(gens, k));
        for (auto c : chunk) {
            profile.push_back(c);
            if (c == 0) return profile;
        }
        m = hi + 1;
    }
    throw std::logic_error("colength profile did not terminate below the hard cap");
}

std::vector<std::size_t> colength_profile_exhaustive(const CurveRing& ring, std::int64_t q) {
    const GeneratorList gens = frobenius_power(ring, q);
    std::vector<std::size_t> profile;
    for (int m = 0; m <= hard_cap(ring, q); ++m)
        profile.push_back(m < q ? ring.hilbert_dim(m) : ring.hilbert_dim(m) - rank_serial(syzygy_matrix(gens, m)));
    return profile;
}

HKRecord hk_record(const CurveRing& ring, int e) {
    HKRecord rec;
    rec.e = e;
    rec.q = int_pow(ring.prime().value(), e);
    rec.profile = colength_profile(ring, rec.q);
    rec.total = std::accumulate(rec.profile.begin(), rec.profile.end(), std::int64_t{0},
                                [](std::int64_t a, std::size_t b) { return a + static_cast<std::int64_t>(b); });
    return rec;
}

std::int64_t hk_value(const CurveRing& ring, int e) { return hk_record(ring, e).total; }

bool fermat_periodic_characteristic(int d, std::int64_t p) noexcept { return d >= 1 && p % (2 * d) == 2 * d - 1; }

Rational balanced_hk_value(int d, std::int64_t p, int e) {
    const std::int64_t q = int_pow(p, e);
    const Rational c(3 * d, 4);
    return c * (q * q) + 1 - c;
}

Rational hk_closed_formula(int d, std::int64_t p, int e) {
    if (!fermat_periodic_characteristic(d, p)) throw std::domain_error("formula out of range");
    const Rational v = balanced_hk_value(d, p, e);
    if (v.denominator() != 1) throw std::logic_error("closed formula is not an integer");
    return v;
}

Rational elliptic_formula(std::int64_t p, int e) {
    if (p % 2 == 0) throw std::domain_error("odd characteristic required");
    const std::int64_t q = int_pow(p, e);
    return Rational(9, 4) * (q * q) - Rational(5, 4);
}

Rational monsky_deviation_formula(int d, std::int64_t p) {
    const Rational base(3 * d, 4);
    const std::int64_t r = p % (2 * d);
    if (d % 2 == 0) {
        if (r != d + 1 && r != d - 1) throw std::domain_error("congruence p = d +- 1 mod 2d not satisfied");
        const std::int64_t num = std::int64_t{d} * (d - 3);
        return base + Rational(num * num, 4 * std::int64_t{d} * p * p);
    }
    if (r != d) throw std::domain_error("congruence p = d mod 2d not satisfied");
    return base + Rational(std::int64_t{d} * d * d, 4 * p * p);
}

HKSummary strong_semistability_verdict(const CurveRing& ring, int e_max) {
    if (e_max < 1) throw std::invalid_argument("e_max must be at least 1");
    HKSummary s;
    s.d = ring.degree();
    s.p = ring.prime();
    const bool in_range = fermat_periodic_characteristic(s.d, s.p) && ring.is_fermat();
    bool all_match = true, any_excess = false;
    for (int e = 1; e <= e_max; ++e) {
        HKRecord rec = hk_record(ring, e);
        const Rational phi(rec.total);
        s.ehk_estimates.push_back(phi / (rec.q * rec.q));
        s.balanced_value.push_back(balanced_hk_value(s.d, s.p, e));
        s.formula.push_back(in_range ? std::optional<Rational>(hk_closed_formula(s.d, s.p, e)) : std::nullopt);
        if (!s.formula.back() || *s.formula.back() != phi) all_match = false;
        if (phi > s.balanced_value.back()) any_excess = true;
        s.records.push_back(std::move(rec));
    }
    if (in_range && all_match)
        s.verdict = HKVerdict::matches_closed_formula;
    else if (any_excess)
        s.verdict = HKVerdict::deviates;
    else
        s.verdict = HKVerdict::inconclusive;
    return s;
}

StarIdentityCheck star_identity(const CurveRing& ring, std::int64_t q, int m) {
    StarIdentityCheck c;
    c.m = m;
    c.colength = colength_at(ring, q, m);
    c.h0_m = h0_line_bundle(ring, m);
    c.h0_shifted = h0_line_bundle(ring, m - to_degree(q));
    c.sections = syzygy_basis(frobenius_power(ring, q), m).dim();
    c.holds = static_cast<std::int64_t>(c.colength) ==
              static_cast<std::int64_t>(c.h0_m) - 3 * static_cast<std::int64_t>(c.h0_shifted) +
                  static_cast<std::int64_t>(c.sections);
    return c;
}

bool crosscheck_star_identity(const CurveRing& ring, std::int64_t q, int m) { return star_identity(ring, q, m).holds; }

}  // namespace frobper
