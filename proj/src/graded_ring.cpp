#include "frobper/graded_ring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace frobper {

namespace {

int levels_in_degree(int d, int m) noexcept { return m < 0 ? 0 : std::min(d - 1, m) + 1; }

std::size_t level_offset(int m, int k) noexcept {
    // sum_{k' < k} (m - k' + 1)
    return static_cast<std::size_t>(k * (m + 1) - k * (k - 1) / 2);
}

}  // namespace

CurveRing::CurveRing(Prime p, int d) : CurveRing(p, BinaryForm::fermat(p, d)) {}

CurveRing::CurveRing(Prime p, BinaryForm relation) {
    const int d = relation.degree();
    if (d < 2) throw std::invalid_argument("curve degree must be at least 2");
    if (relation.modulus() != p) throw std::invalid_argument("relation defined over a different field");
    if (d % static_cast<int>(p.value()) == 0)
        throw std::invalid_argument("singular curve: p = " + std::to_string(p.value()) + " divides d = " + std::to_string(d));
    // With p not dividing d, Euler's identity d P = X P_X + Y P_Y shows that P
    // has a repeated factor iff its two partials share a root.
    if (polynomial_gcd(relation.d_dx(), relation.d_dy()).degree() != 0)
        throw std::invalid_argument("singular curve: relation form is not squarefree");
    state_ = std::make_shared<const State>(p, d, std::move(relation));
}

bool CurveRing::is_fermat() const { return relation() == BinaryForm::fermat(prime(), degree()); }

const std::vector<Monomial>& CurveRing::monomial_basis(int m) const {
    static const std::vector<Monomial> empty;
    if (m < 0) return empty;
    {
        std::shared_lock lock(state_->mutex);
        if (auto it = state_->bases.find(m); it != state_->bases.end()) return it->second;
    }
    std::vector<Monomial> basis;
    basis.reserve(hilbert_dim(m));
    for (int k = 0; k < levels_in_degree(degree(), m); ++k)
        for (int i = 0; i <= m - k; ++i) basis.push_back({i, m - k - i, k});
    std::unique_lock lock(state_->mutex);
    return state_->bases.try_emplace(m, std::move(basis)).first->second;
}

std::size_t CurveRing::hilbert_dim(int m) const noexcept {
    return m < 0 ? 0 : level_offset(m, levels_in_degree(degree(), m));
}

std::size_t CurveRing::index_of(const Monomial& mono) const noexcept {
    return level_offset(mono.degree(), mono.z) + static_cast<std::size_t>(mono.x);
}

const BinaryForm& CurveRing::relation_power(int n) const {
    {
        std::shared_lock lock(state_->mutex);
        if (auto it = state_->powers.find(n); it != state_->powers.end()) return it->second;
    }
    BinaryForm power = relation().pow(n);
    std::unique_lock lock(state_->mutex);
    return state_->powers.try_emplace(n, std::move(power)).first->second;
}

GradedElement::GradedElement(CurveRing ring, int degree)
    : ring_(std::move(ring)), degree_(degree), coeffs_(ring_.hilbert_dim(degree), 0) {}

GradedElement::GradedElement(CurveRing ring, int degree, std::vector<residue> coeffs)
    : ring_(std::move(ring)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_.hilbert_dim(degree_))
        throw std::invalid_argument("coefficient list does not match dim R_" + std::to_string(degree_));
    for (auto& c : coeffs_) c %= ring_.prime().value();
}

GradedElement GradedElement::from_form(const CurveRing& ring, const BinaryForm& f) {
    GradedElement out(ring, f.degree());
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.coeffs_.begin());
    return out;
}

GradedElement GradedElement::from_levels(const CurveRing& ring, int degree, const std::vector<BinaryForm>& levels) {
    GradedElement out(ring, degree);
    if (static_cast<int>(levels.size()) > out.num_levels()) throw std::invalid_argument("too many levels");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].degree() != degree - static_cast<int>(k)) throw std::invalid_argument("level form has wrong degree");
        std::copy(levels[k].coeffs().begin(), levels[k].coeffs().end(),
                  out.coeffs_.begin() + static_cast<std::ptrdiff_t>(level_offset(degree, static_cast<int>(k))));
    }
    return out;
}

int GradedElement::num_levels() const noexcept { return levels_in_degree(ring_.degree(), degree_); }

BinaryForm GradedElement::level(int k) const {
    if (k < 0 || k >= num_levels()) throw std::out_of_range("no such level");
    BinaryForm f(ring_.prime(), degree_ - k);
    const std::size_t off = level_offset(degree_, k);
    for (int i = 0; i <= degree_ - k; ++i) f.set_coeff(i, coeffs_[off + static_cast<std::size_t>(i)]);
    return f;
}

bool GradedElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](residue c) { return c == 0; });
}

GradedElement GradedElement::operator+(const GradedElement& rhs) const {
    if (rhs.degree_ != degree_) throw std::invalid_argument("adding elements of different degree");
    GradedElement out = *this;
    const residue p = ring_.prime();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], p);
    return out;
}

GradedElement GradedElement::operator-(const GradedElement& rhs) const { return *this + rhs.negated(); }

GradedElement GradedElement::scaled(residue c) const {
    GradedElement out = *this;
    const residue p = ring_.prime();
    for (auto& x : out.coeffs_) x = mul_mod(x, c % p, p);
    return out;
}

GradedElement GradedElement::negated() const {
    GradedElement out = *this;
    const residue p = ring_.prime();
    for (auto& x : out.coeffs_) x = neg_mod(x, p);
    return out;
}

GradedElement GradedElement::operator*(const GradedElement& rhs) const {
    const int deg = degree_ + rhs.degree_;
    GradedElement out(ring_, deg);
    if (degree_ < 0 || rhs.degree_ < 0) return out;
    const int d = ring_.degree();
    const residue p = ring_.prime();
    for (int k = 0; k < num_levels(); ++k) {
        const BinaryForm a = level(k);
        if (a.is_zero()) continue;
        for (int l = 0; l < rhs.num_levels(); ++l) {
            const BinaryForm b = rhs.level(l);
            if (b.is_zero()) continue;
            BinaryForm prod = a * b;
            int z = k + l;
            if (z >= d) {
                prod = prod * ring_.relation();
                z -= d;
            }
            const std::size_t off = level_offset(deg, z);
            for (int i = 0; i <= prod.degree(); ++i) {
                auto& c = out.coeffs_[off + static_cast<std::size_t>(i)];
                c = add_mod(c, prod.coeff(i), p);
            }
        }
    }
    return out;
}

residue GradedElement::evaluate(residue x, residue y, residue z) const noexcept {
    const residue p = ring_.prime();
    residue acc = 0;
    const auto& basis = ring_.monomial_basis(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& mono = basis[i];
        residue term = coeffs_[i];
        term = mul_mod(term, pow_mod(x, static_cast<std::uint64_t>(mono.x), p), p);
        term = mul_mod(term, pow_mod(y, static_cast<std::uint64_t>(mono.y), p), p);
        term = mul_mod(term, pow_mod(z, static_cast<std::uint64_t>(mono.z), p), p);
        acc = add_mod(acc, term, p);
    }
    return acc;
}

GradedElement reduce_monomial(const CurveRing& ring, const Monomial& mono) {
    if (mono.x < 0 || mono.y < 0 || mono.z < 0) throw std::invalid_argument("negative exponent");
    const int d = ring.degree();
    const int level = mono.z % d;
    BinaryForm form = ring.relation_power(mono.z / d) * BinaryForm::monomial(ring.prime(), mono.x, mono.y);
    GradedElement out(ring, mono.degree());
    const std::size_t off = ring.index_of({0, mono.degree() - level, level});
    std::vector<residue> c = out.coeffs();
    for (int i = 0; i <= form.degree(); ++i) c[off + static_cast<std::size_t>(i)] = form.coeff(i);
    return GradedElement(ring, mono.degree(), std::move(c));
}

GradedElement x_power(const CurveRing& ring, int a) { return reduce_monomial(ring, {a, 0, 0}); }
GradedElement y_power(const CurveRing& ring, int a) { return reduce_monomial(ring, {0, a, 0}); }
GradedElement z_power(const CurveRing& ring, int a) { return reduce_monomial(ring, {0, 0, a}); }

FpMatrix mult_map(const CurveRing& ring, const GradedElement& f, int m) {
    const int target = m + f.degree();
    FpMatrix out(ring.prime(), ring.hilbert_dim(target), ring.hilbert_dim(m));
    if (m < 0 || f.degree() < 0 || f.is_zero()) return out;
    const int d = ring.degree();
    const residue p = ring.prime();

    // Level forms of f and of f * P (used when Z-exponents wrap past d).
    std::vector<BinaryForm> plain, wrapped;
    for (int k = 0; k < f.num_levels(); ++k) {
        plain.push_back(f.level(k));
        wrapped.push_back(plain.back() * ring.relation());
    }

    const auto& basis = ring.monomial_basis(m);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const Monomial& mu = basis[col];
        for (int k = 0; k < f.num_levels(); ++k) {
            if (plain[static_cast<std::size_t>(k)].is_zero()) continue;
            int z = k + mu.z;
            const BinaryForm* src = &plain[static_cast<std::size_t>(k)];
            if (z >= d) {
                z -= d;
                src = &wrapped[static_cast<std::size_t>(k)];
            }
            const std::size_t off = ring.index_of({0, target - z, z});
            for (int i = 0; i <= src->degree(); ++i) {
                const residue c = src->coeff(i);
                if (c != 0) out.add_to(off + static_cast<std::size_t>(i + mu.x), col, c % p);
            }
        }
    }
    return out;
}

std::size_t h0_line_bundle(const CurveRing& ring, int k) noexcept { return ring.hilbert_dim(k); }

}  // namespace frobper
