#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "frobper/graded_ring.hpp"

using namespace frobper;

namespace {

GradedElement random_element(std::mt19937& rng, const CurveRing& ring, int degree) {
    std::vector<residue> c(ring.hilbert_dim(degree));
    for (auto& x : c) x = rng() % ring.prime().value();
    return GradedElement(ring, degree, std::move(c));
}

// Product by expanding every pair of basis monomials and reducing the
// exponent sum; does not use the level decomposition.
GradedElement naive_product(const GradedElement& a, const GradedElement& b) {
    const CurveRing& ring = a.ring();
    const residue p = ring.prime();
    GradedElement out(ring, a.degree() + b.degree());
    const auto& ba = ring.monomial_basis(a.degree());
    const auto& bb = ring.monomial_basis(b.degree());
    for (std::size_t i = 0; i < ba.size(); ++i)
        for (std::size_t j = 0; j < bb.size(); ++j) {
            const residue c = mul_mod(a.coeffs()[i], b.coeffs()[j], p);
            if (c == 0) continue;
            const Monomial s{ba[i].x + bb[j].x, ba[i].y + bb[j].y, ba[i].z + bb[j].z};
            out = out + reduce_monomial(ring, s).scaled(c);
        }
    return out;
}

}  // namespace

TEST_CASE("monomial bases") {
    const CurveRing ring(Prime(5), 3);
    CHECK(ring.monomial_basis(0) == std::vector<Monomial>{{0, 0, 0}});
    CHECK(ring.monomial_basis(1) == std::vector<Monomial>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    const auto& b3 = ring.monomial_basis(3);
    CHECK(b3.size() == 9);
    int per_level[3] = {0, 0, 0};
    for (const auto& m : b3) {
        CHECK(m.degree() == 3);
        ++per_level[m.z];
    }
    CHECK(per_level[0] == 4);
    CHECK(per_level[1] == 3);
    CHECK(per_level[2] == 2);
    CHECK(ring.monomial_basis(-1).empty());
    for (int m = 0; m < 8; ++m) {
        const auto& b = ring.monomial_basis(m);
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(ring.index_of(b[i]) == i);
    }
}

TEST_CASE("hilbert dimensions") {
    CHECK(CurveRing(Prime(5), 3).hilbert_dim(3) == 9);
    CHECK(CurveRing(Prime(5), 3).hilbert_dim(3) == 3 * 3 - 1 + 1);
    CHECK(CurveRing(Prime(7), 4).hilbert_dim(0) == 1);
    CHECK(CurveRing(Prime(7), 4).hilbert_dim(2) == 6);
    CHECK(CurveRing(Prime(7), 4).hilbert_dim(-3) == 0);
    CHECK(h0_line_bundle(CurveRing(Prime(5), 3), 2) == 6);
    CHECK(h0_line_bundle(CurveRing(Prime(5), 3), -1) == 0);
    CHECK(h0_line_bundle(CurveRing(Prime(3), 5), 10) == 45);

    for (int d = 2; d <= 7; ++d) {
        const int p = d == 5 || d == 7 ? 3 : 11;
        const CurveRing ring(Prime(p), d);
        for (int m = d - 2; m < 40; ++m)
            CHECK(static_cast<int>(ring.hilbert_dim(m)) == d * m - ring.genus() + 1);
        for (int m = d - 1; m < 40; ++m)
            CHECK(ring.hilbert_dim(m + 1) - ring.hilbert_dim(m) == static_cast<std::size_t>(d));
    }
}

TEST_CASE("smoothness is enforced at construction") {
    CHECK_THROWS_AS(CurveRing(Prime(3), 3), std::invalid_argument);
    CHECK_THROWS_AS(CurveRing(Prime(2), 4), std::invalid_argument);
    // X^2 Y has a repeated factor
    CHECK_THROWS_AS(CurveRing(Prime(5), BinaryForm::monomial(Prime(5), 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(CurveRing(Prime(5), BinaryForm(Prime(5), {0, 1})), std::invalid_argument);
    // X^3 - XY^2 = X (X - Y)(X + Y) is squarefree
    const CurveRing ok(Prime(5), BinaryForm(Prime(5), {0, -1, 0, 1}));
    CHECK(ok.degree() == 3);
    CHECK_FALSE(ok.is_fermat());
    CHECK(CurveRing(Prime(5), 3).is_fermat());
}

TEST_CASE("reduce_monomial") {
    const CurveRing ring(Prime(3), 2);
    const GradedElement z2 = reduce_monomial(ring, {0, 0, 2});
    CHECK(z2.level(0) == BinaryForm::fermat(Prime(3), 2));
    CHECK(z2.level(1).is_zero());

    const GradedElement plain = reduce_monomial(ring, {1, 2, 0});
    CHECK(plain.coeff({1, 2, 0}) == 1);
    CHECK(std::count(plain.coeffs().begin(), plain.coeffs().end(), 0u) == static_cast<long>(plain.coeffs().size()) - 1);

    // (X^2 + Y^2)^2 = X^4 + 2 X^2 Y^2 + Y^4
    const GradedElement z4 = reduce_monomial(ring, {0, 0, 4});
    CHECK(z4.level(0) == BinaryForm(Prime(3), {1, 0, 2, 0, 1}));

    // already-reduced monomials are fixed points
    const CurveRing cubic(Prime(7), 3);
    for (int m = 0; m < 6; ++m)
        for (const auto& mono : cubic.monomial_basis(m)) {
            const GradedElement r = reduce_monomial(cubic, mono);
            CHECK(r.coeff(mono) == 1);
        }
}

TEST_CASE("mult_map examples") {
    const CurveRing ring(Prime(3), 2);
    const GradedElement one = reduce_monomial(ring, {0, 0, 0});
    CHECK(mult_map(ring, one, 4) == FpMatrix::identity(ring.prime(), ring.hilbert_dim(4)));
    CHECK(mult_map(ring, GradedElement(ring, 2), 3) == FpMatrix(ring.prime(), ring.hilbert_dim(5), ring.hilbert_dim(3)));

    // Z^2 on R_0: basis of R_2 is Y^2, XY, X^2, YZ, XZ.
    const FpMatrix z2 = mult_map(ring, z_power(ring, 2), 0);
    REQUIRE(z2.cols() == 1);
    REQUIRE(z2.rows() == 5);
    const std::vector<residue> col{z2(0, 0), z2(1, 0), z2(2, 0), z2(3, 0), z2(4, 0)};
    CHECK(col == std::vector<residue>{1, 0, 1, 0, 0});
}

TEST_CASE("level multiplication agrees with monomial expansion") {
    std::mt19937 rng(11);
    for (auto [p, d] : {std::pair{3, 2}, {5, 3}, {7, 4}, {2, 3}}) {
        const CurveRing ring(Prime(p), d);
        for (int trial = 0; trial < 10; ++trial) {
            const GradedElement a = random_element(rng, ring, static_cast<int>(rng() % 5));
            const GradedElement b = random_element(rng, ring, static_cast<int>(rng() % 5));
            CHECK(a * b == naive_product(a, b));
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("mult_map composes") {
    std::mt19937 rng(5);
    for (auto [p, d] : {std::pair{3, 2}, {5, 3}, {3, 4}}) {
        const CurveRing ring(Prime(p), d);
        for (int trial = 0; trial < 6; ++trial) {
            const GradedElement f = random_element(rng, ring, 1 + static_cast<int>(rng() % 3));
            const GradedElement g = random_element(rng, ring, 1 + static_cast<int>(rng() % 3));
            const int m = static_cast<int>(rng() % 5);
            CHECK(mult_map(ring, f * g, m) == mult_map(ring, f, m + g.degree()) * mult_map(ring, g, m));
        }
    }
}

TEST_CASE("basis cache is safe under concurrent population") {
    const CurveRing ring(Prime(5), 3);
    std::vector<std::thread> pool;
    std::vector<std::size_t> sizes(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            std::size_t total = 0;
            for (int m = 0; m < 60; ++m) total += ring.monomial_basis((m * 7 + t) % 60).size();
            sizes[static_cast<std::size_t>(t)] = total;
        });
    for (auto& th : pool) th.join();
    for (auto s : sizes) CHECK(s == sizes.front());
}

TEST_CASE("evaluation at points of the curve") {
    const CurveRing ring(Prime(5), 2);
    // (3, 4, 0): 9 + 16 = 25 = 0 mod 5, so Z^2 - X^2 - Y^2 vanishes; check the rewrite
    const GradedElement z2 = z_power(ring, 2);
    CHECK(z2.evaluate(3, 4, 0) == 0);
    CHECK(z2.evaluate(1, 2, 0) == 0);
    CHECK(x_power(ring, 2).evaluate(2, 0, 0) == 4);
}
