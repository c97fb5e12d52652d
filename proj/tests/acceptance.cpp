// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "frobper/periodicity.hpp"

using namespace frobper;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const std::vector<std::tuple<int, int, int>> periodic_cases{{2, 3, 1}, {2, 3, 2}, {2, 7, 1}, {3, 5, 1},
                                                            {3, 5, 2}, {4, 7, 1}, {5, 19, 1}, {6, 11, 1}};

std::string str(std::int64_t v) { return std::to_string(v); }

Outcome criterion1() {
    Outcome o;
    for (auto [d, p, e] : periodic_cases) {
        const std::int64_t phi = hk_value(CurveRing(Prime(p), d), e);
        const Rational f = hk_closed_formula(d, p, e);
        if (Rational(phi) != f)
            o.fail("(" + str(d) + "," + str(p) + "," + str(e) + "): phi=" + str(phi) + " formula=" + str(f.numerator()));
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int p : {5, 7, 11})
        for (int e : {1, 2}) {
            const std::int64_t phi = hk_value(CurveRing(Prime(p), 3), e);
            if (Rational(phi) != elliptic_formula(p, e)) o.fail("p=" + str(p) + " e=" + str(e) + " phi=" + str(phi));
        }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (auto [d, p, e] : periodic_cases) {
        const CurveRing ring(Prime(p), d);
        const HKRecord rec = hk_record(ring, e);
        for (std::size_t m = 0; m < rec.profile.size(); ++m) {
            const StarIdentityCheck c = star_identity(ring, rec.q, static_cast<int>(m));
            if (!c.holds || c.colength != rec.profile[m])
                o.fail("(" + str(d) + "," + str(p) + "," + str(e) + ") m=" + str(static_cast<std::int64_t>(m)));
        }
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (auto [d, p] : {std::pair{2, 3}, {2, 7}, {3, 5}, {4, 7}, {5, 19}}) {
        const PeriodicityReport r = verify_theorem(d, p);
        if (!r.overall.value_or(false)) o.fail("(" + str(d) + "," + str(p) + ") overall false");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937 rng(20240501);
    int sets = 0;
    while (sets < 20) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const int p = std::vector<int>{2, 3, 5, 7}[rng() % 4];
        if (d % p == 0) continue;
        const CurveRing ring(Prime(p), d);
        const int a1 = 1 + static_cast<int>(rng() % (2 * p));
        const int a2 = 1 + static_cast<int>(rng() % (2 * p));
        const int a3 = 1 + static_cast<int>(rng() % (2 * p));
        ++sets;
        const std::string tag = "d=" + str(d) + " p=" + str(p) + " a=(" + str(a1) + "," + str(a2) + "," + str(a3) + ")";
        const GeneratorList target = GeneratorList::monomial_powers(ring, a1, a2, a3);
        for (int m = 0; m <= 3 * p; ++m) {
            const LemmaMapResult r = lemma_map_phi(ring, a1, a2, a3, m);
            if (!r.surjective()) o.fail(tag + " not surjective at m=" + str(m));
            if (!r.injective_on_summands()) o.fail(tag + " summand not injective at m=" + str(m));
            for (const auto& s : syzygy_basis(target, m).basis) {
                const auto parts = decompose_syzygy(ring, s, a1, a2, a3);
                SyzygyTuple total{GradedElement(ring, s[0].degree()), GradedElement(ring, s[1].degree()),
                                  GradedElement(ring, s[2].degree())};
                for (const auto& c : parts) {
                    if (!is_syzygy(target, c.tuple)) o.fail(tag + " component not a syzygy at m=" + str(m));
                    for (std::size_t i = 0; i < 3; ++i) total[i] = total[i] + c.tuple[i];
                }
                if (total != s) o.fail(tag + " components do not re-sum at m=" + str(m));
            }
        }
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    const CurveRing ring(Prime(3), 4);
    const GeneratorList g = GeneratorList::monomial_powers(ring, 3, 3, 3);
    const auto w = instability_witness(g, 0, 6);
    if (!w) o.fail("no witness");
    else if (w->m != 4 || w->degree != -4) o.fail("witness at m=" + str(w->m) + " degree " + str(w->degree));
    const std::size_t h = syzygy_dim(g, 4);
    if (h != 1) o.fail("h0 at twist 4 is " + str(static_cast<std::int64_t>(h)));
    return o;
}

Outcome criterion7() {
    Outcome o;
    const Char2Result r = char2_cubic_suite();
    if (r.q2_at_3 != 1 || r.q2_at_2 != 0) o.fail("q=2 dims");
    if (r.q4_at_6 != 2) o.fail("q=4 dim at 6");
    if (!r.q8_vs_q4.ok || r.q8_vs_q4.rows.size() != 31) o.fail("q=8 vs q=4 window");
    return o;
}

Outcome criterion8() {
    Outcome o;
    const DoubleCoverResult r = double_cover_check(2, 3, std::pair{0, 24});
    if (r.shift != 6) o.fail("shift");
    if (!r.window.ok) o.fail("window");
    if (r.balanced_degree != 0 || r.sections_at_three != 0) o.fail("balanced twist");
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (int p : {3, 5}) {
        const CurveRing ring(Prime(p), 4);
        const HKSummary s = strong_semistability_verdict(ring, 2);
        if (s.verdict != HKVerdict::deviates) o.fail("p=" + str(p) + " verdict " + to_string(s.verdict));
        for (std::size_t i = 0; i < 2; ++i)
            if (Rational(s.records[i].total) <= s.balanced_value[i]) o.fail("p=" + str(p) + " no excess at e=" + str(i + 1));
        const Rational target = monsky_deviation_formula(4, p);
        if (boost::abs(s.ehk_estimates[1] - target) > boost::abs(s.ehk_estimates[0] - target))
            o.fail("p=" + str(p) + " estimate moved away from the limit");
    }
    return o;
}

// ---- criterion 10 oracle: own elimination over Z/p on coefficient vectors ----

std::size_t oracle_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] % p == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        std::int64_t inv = 1;
        for (std::int64_t b = a[r][c] % p, e = p - 2; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] % p == 0) continue;
            const std::int64_t f = a[i][c] * inv % p;
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

// dim of {(s1,s2,s3) : sum s_i f_i = 0, deg s_i = m - deg f_i}
std::size_t oracle_sections(const std::vector<std::vector<std::int64_t>>& f, std::int64_t p, int m) {
    std::vector<std::vector<std::int64_t>> rows;  // one row per source monomial, image coefficients
    std::size_t source = 0;
    for (const auto& g : f) {
        const int deg = static_cast<int>(g.size()) - 1;
        for (int s = 0; s <= m - deg; ++s) {
            std::vector<std::int64_t> img(static_cast<std::size_t>(m) + 1, 0);
            for (int i = 0; i <= deg; ++i) img[static_cast<std::size_t>(s + i)] = g[static_cast<std::size_t>(i)] % p;
            rows.push_back(img);
            ++source;
        }
    }
    return source - oracle_rank(rows, p);
}

Outcome criterion10() {
    Outcome o;
    std::mt19937 rng(777);
    int done = 0;
    while (done < 50) {
        const std::int64_t p = std::vector<int>{2, 3, 5, 7}[rng() % 4];
        std::vector<std::vector<std::int64_t>> raw(3);
        std::vector<BinaryForm> forms;
        int total = 0;
        for (auto& c : raw) {
            const int deg = 1 + static_cast<int>(rng() % 8);
            c.resize(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
            if (c.back() == 0 && c.front() == 0) c.back() = 1;
            forms.emplace_back(Prime(p), c);
            total += deg;
        }
        bool nonzero = true;
        for (const auto& f : forms) nonzero = nonzero && !f.is_zero();
        if (!nonzero) continue;
        if (polynomial_gcd(polynomial_gcd(forms[0], forms[1]), forms[2]).degree() > 0) continue;
        ++done;

        std::vector<std::size_t> profile;
        for (int m = 0; m <= total + 2; ++m) profile.push_back(oracle_sections(raw, p, m));
        std::optional<SplittingType> fit;
        for (int a = 0; a <= total && !fit; ++a) {
            const int b = total - a;
            if (a > b) break;
            bool ok = true;
            for (int m = 0; m <= total + 2; ++m) {
                const std::size_t model = static_cast<std::size_t>(std::max(0, m - a + 1) + std::max(0, m - b + 1));
                if (profile[static_cast<std::size_t>(m)] != model) ok = false;
            }
            if (ok) fit = SplittingType{a, b};
        }
        if (!fit) {
            o.fail("oracle could not fit a split profile");
            continue;
        }
        const SplittingType got = splitting_type_p1(forms);
        if (!(got == *fit))
            o.fail("p=" + str(p) + " engine (" + str(got.a) + "," + str(got.b) + ") oracle (" + str(fit->a) + "," + str(fit->b) + ")");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"closed Hilbert-Kunz formula for p = -1 mod 2d", criterion1},
        {"elliptic Hilbert-Kunz formula, d=3, p in {5,7,11}", criterion2},
        {"colength identity at every degree", criterion3},
        {"periodicity verification", criterion4},
        {"splitting lemma on 20 random parameter sets", criterion5},
        {"instability witness, char 3 quartic", criterion6},
        {"characteristic 2 cubic suite", criterion7},
        {"double cover of degree 4", criterion8},
        {"deviation for d=4, p in {3,5}", criterion9},
        {"projective line splitting oracle, 50 triples", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu: %s  %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                    o.pass ? "" : ": ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
