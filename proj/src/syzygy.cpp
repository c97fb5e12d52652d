#include "frobper/syzygy.hpp"

#include <numeric>
#include <stdexcept>

namespace frobper {

GeneratorList::GeneratorList(CurveRing ring, std::vector<GradedElement> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    if (gens_.size() < 2) throw std::invalid_argument("need at least two generators");
    for (const auto& g : gens_) {
        if (!(g.ring() == ring_)) throw std::invalid_argument("generator from a different ring");
        if (g.degree() < 0) throw std::invalid_argument("generator of negative degree");
    }
}

GeneratorList GeneratorList::monomial_powers(const CurveRing& ring, int a1, int a2, int a3) {
    return GeneratorList(ring, {x_power(ring, a1), y_power(ring, a2), z_power(ring, a3)});
}

std::vector<int> GeneratorList::degrees() const {
    std::vector<int> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.degree());
    return out;
}

FpMatrix syzygy_matrix(const GeneratorList& gens, int m) {
    const CurveRing& ring = gens.ring();
    std::size_t cols = 0;
    for (const auto& g : gens.gens()) cols += ring.hilbert_dim(m - g.degree());
    FpMatrix out(ring.prime(), ring.hilbert_dim(m), cols);
    std::size_t col0 = 0;
    for (const auto& g : gens.gens()) {
        const int src = m - g.degree();
        if (src < 0) continue;
        const FpMatrix block = mult_map(ring, g, src);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                if (const residue v = block(r, c)) out.set(r, col0 + c, v);
        col0 += block.cols();
    }
    return out;
}

std::size_t syzygy_dim(const GeneratorList& gens, int m) {
    const FpMatrix a = syzygy_matrix(gens, m);
    return a.cols() - rank(a);
}

std::vector<std::size_t> syzygy_dims(const GeneratorList& gens, int lo, int hi) {
    if (hi < lo) return {};
    std::vector<std::size_t> out(static_cast<std::size_t>(hi - lo + 1));
    // Warm the basis cache serially; concurrent population is safe but slower.
    for (int m = lo; m <= hi; ++m) gens.ring().monomial_basis(m);
#pragma omp parallel for schedule(dynamic)
    for (int m = lo; m <= hi; ++m) out[static_cast<std::size_t>(m - lo)] = syzygy_dim(gens, m);
    return out;
}

std::vector<residue> flatten(const SyzygyTuple& s) {
    std::vector<residue> out;
    for (const auto& c : s) out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    return out;
}

SyzygyTuple unflatten(const GeneratorList& gens, int m, std::span<const residue> coords) {
    SyzygyTuple out;
    std::size_t pos = 0;
    for (const auto& g : gens.gens()) {
        const int deg = m - g.degree();
        const std::size_t n = gens.ring().hilbert_dim(deg);
        if (pos + n > coords.size()) throw std::invalid_argument("coordinate vector too short");
        out.emplace_back(gens.ring(), deg, std::vector<residue>(coords.begin() + static_cast<std::ptrdiff_t>(pos),
                                                               coords.begin() + static_cast<std::ptrdiff_t>(pos + n)));
        pos += n;
    }
    if (pos != coords.size()) throw std::invalid_argument("coordinate vector too long");
    return out;
}

SyzygySpace syzygy_basis(const GeneratorList& gens, int m) {
    SyzygySpace space;
    space.m = m;
    for (const auto& v : kernel_basis(syzygy_matrix(gens, m))) space.basis.push_back(unflatten(gens, m, v));
    return space;
}

bool is_syzygy(const GeneratorList& gens, const SyzygyTuple& s) {
    if (s.size() != gens.size()) return false;
    std::optional<GradedElement> sum;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i].ring() == gens.ring())) return false;
        if (s[i].degree() + gens.gens()[i].degree() != s.front().degree() + gens.gens().front().degree()) return false;
        GradedElement term = s[i] * gens.gens()[i];
        sum = sum ? *sum + term : term;
    }
    return sum->is_zero();
}

std::int64_t bundle_degree(int d, std::span<const int> gen_degrees, int m) {
    const std::int64_t n = static_cast<std::int64_t>(gen_degrees.size());
    const std::int64_t total = std::accumulate(gen_degrees.begin(), gen_degrees.end(), std::int64_t{0});
    return ((n - 1) * m - total) * d;
}

FpMatrix p1_syzygy_matrix(std::span<const BinaryForm> forms, int m) {
    if (forms.empty()) throw std::invalid_argument("no forms");
    const Prime p = forms.front().modulus();
    auto dim = [](int k) -> std::size_t { return k < 0 ? 0 : static_cast<std::size_t>(k) + 1; };
    std::size_t cols = 0;
    for (const auto& f : forms) cols += dim(m - f.degree());
    FpMatrix out(p, dim(m), cols);
    std::size_t col = 0;
    for (const auto& f : forms) {
        const int src = m - f.degree();
        for (int i = 0; i <= src; ++i, ++col)
            for (int j = 0; j <= f.degree(); ++j)
                if (const residue c = f.coeff(j)) out.set(static_cast<std::size_t>(i + j), col, c);
    }
    return out;
}

std::size_t p1_syzygy_dim(std::span<const BinaryForm> forms, int m) {
    const FpMatrix a = p1_syzygy_matrix(forms, m);
    return a.cols() - rank(a);
}

std::vector<std::vector<BinaryForm>> p1_syzygy_basis(std::span<const BinaryForm> forms, int m) {
    std::vector<std::vector<BinaryForm>> out;
    for (const auto& v : kernel_basis(p1_syzygy_matrix(forms, m))) {
        std::vector<BinaryForm> tuple;
        std::size_t pos = 0;
        for (const auto& f : forms) {
            const int deg = m - f.degree();
            if (deg < 0) {
                // Represent an empty component as the zero form of degree 0.
                tuple.emplace_back(f.modulus(), 0);
                continue;
            }
            BinaryForm c(f.modulus(), deg);
            for (int i = 0; i <= deg; ++i) c.set_coeff(i, v[pos + static_cast<std::size_t>(i)]);
            pos += static_cast<std::size_t>(deg) + 1;
            tuple.push_back(std::move(c));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

std::size_t split_profile(const SplittingType& t, int m) noexcept {
    auto part = [m](int a) -> std::size_t { return m - a + 1 > 0 ? static_cast<std::size_t>(m - a + 1) : 0; };
    return part(t.a) + part(t.b);
}

SplittingType splitting_type_p1(std::span<const BinaryForm> forms) {
    if (forms.size() != 3) throw std::invalid_argument("splitting type needs exactly three forms");
    for (const auto& f : forms)
        if (f.is_zero()) throw std::invalid_argument("zero form");
    if (polynomial_gcd(polynomial_gcd(forms[0], forms[1]), forms[2]).degree() != 0)
        throw std::invalid_argument("not R_+-primary");

    const int total = forms[0].degree() + forms[1].degree() + forms[2].degree();
    int a = -1;
    for (int m = 0; m <= total; ++m)
        if (p1_syzygy_dim(forms, m) > 0) {
            a = m;
            break;
        }
    if (a < 0) throw std::logic_error("no syzygy up to the total degree");
    const SplittingType t{a, total - a};
    for (int m = 0; m <= t.a + t.b + 2; ++m)
        if (p1_syzygy_dim(forms, m) != split_profile(t, m))
            throw std::logic_error("section profile does not match a split rank-2 bundle");
    return t;
}

std::optional<InstabilityWitness> instability_witness(const GeneratorList& gens, int m_lo, int m_hi) {
    if (gens.size() != 3) throw std::invalid_argument("instability witness needs three generators");
    const auto degs = gens.degrees();
    for (int m = m_lo; m <= m_hi; ++m) {
        const std::int64_t deg = bundle_degree(gens.ring().degree(), degs, m);
        if (deg >= 0) continue;
        if (syzygy_dim(gens, m) == 0) continue;
        SyzygySpace space = syzygy_basis(gens, m);
        return InstabilityWitness{m, deg, std::move(space.basis.front())};
    }
    return std::nullopt;
}

}  // namespace frobper
