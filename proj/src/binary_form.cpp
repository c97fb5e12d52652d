#include "frobper/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frobper {

namespace {

using upoly = std::vector<residue>;  // low to high

void trim(upoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

upoly poly_mod(upoly a, const upoly& b, residue p) {
    const residue inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const residue f = mul_mod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(f, b[i], p), p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

upoly poly_gcd(upoly a, upoly b, residue p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        upoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const residue inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv, p);
    }
    return a;
}

}  // namespace

BinaryForm::BinaryForm(Prime p, int degree) : p_(p) {
    if (degree < 0) throw std::invalid_argument("binary form of negative degree");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

BinaryForm::BinaryForm(Prime p, std::vector<std::int64_t> coeffs) : p_(p) {
    if (coeffs.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(reduce_signed(c, p));
}

BinaryForm BinaryForm::monomial(Prime p, int x_exp, int y_exp, residue c) {
    BinaryForm f(p, x_exp + y_exp);
    f.coeffs_[static_cast<std::size_t>(x_exp)] = c % p.value();
    return f;
}

BinaryForm BinaryForm::fermat(Prime p, int d) {
    BinaryForm f(p, d);
    f.coeffs_.front() = add_mod(f.coeffs_.front(), 1, p);
    f.coeffs_.back() = add_mod(f.coeffs_.back(), 1, p);
    return f;
}

void BinaryForm::set_coeff(int x_exp, std::int64_t c) noexcept {
    coeffs_[static_cast<std::size_t>(x_exp)] = reduce_signed(c, p_);
}

bool BinaryForm::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](residue c) { return c == 0; });
}

BinaryForm BinaryForm::operator+(const BinaryForm& rhs) const {
    if (rhs.degree() != degree()) throw std::invalid_argument("adding forms of different degree");
    BinaryForm out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], p_);
    return out;
}

BinaryForm BinaryForm::operator-(const BinaryForm& rhs) const {
    if (rhs.degree() != degree()) throw std::invalid_argument("subtracting forms of different degree");
    BinaryForm out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = sub_mod(coeffs_[i], rhs.coeffs_[i], p_);
    return out;
}

BinaryForm BinaryForm::operator*(const BinaryForm& rhs) const {
    BinaryForm out(p_, degree() + rhs.degree());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] = add_mod(out.coeffs_[i + j], mul_mod(coeffs_[i], rhs.coeffs_[j], p_), p_);
    }
    return out;
}

BinaryForm BinaryForm::scaled(residue c) const {
    BinaryForm out = *this;
    for (auto& x : out.coeffs_) x = mul_mod(x, c % p_, p_);
    return out;
}

BinaryForm BinaryForm::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a form");
    BinaryForm result = monomial(p_, 0, 0);
    BinaryForm base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

BinaryForm BinaryForm::d_dx() const {
    if (degree() == 0) return BinaryForm(p_, 0);
    BinaryForm out(p_, degree() - 1);
    for (int i = 1; i <= degree(); ++i) out.coeffs_[static_cast<std::size_t>(i - 1)] = mul_mod(coeff(i), static_cast<residue>(i) % p_, p_);
    return out;
}

BinaryForm BinaryForm::d_dy() const {
    if (degree() == 0) return BinaryForm(p_, 0);
    BinaryForm out(p_, degree() - 1);
    for (int i = 0; i < degree(); ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = mul_mod(coeff(i), static_cast<residue>(degree() - i) % p_, p_);
    return out;
}

BinaryForm BinaryForm::inflate(int k) const {
    if (k < 1) throw std::invalid_argument("inflation factor must be positive");
    BinaryForm out(p_, degree() * k);
    for (int i = 0; i <= degree(); ++i) out.coeffs_[static_cast<std::size_t>(i * k)] = coeff(i);
    return out;
}

int BinaryForm::y_valuation() const noexcept {
    for (int i = degree(); i >= 0; --i)
        if (coeff(i) != 0) return degree() - i;
    return degree();
}

int BinaryForm::x_valuation() const noexcept {
    for (int i = 0; i <= degree(); ++i)
        if (coeff(i) != 0) return i;
    return degree();
}

residue BinaryForm::evaluate(residue x, residue y) const noexcept {
    residue acc = 0;
    for (int i = 0; i <= degree(); ++i) {
        if (coeff(i) == 0) continue;
        const residue term = mul_mod(mul_mod(coeff(i), pow_mod(x, static_cast<std::uint64_t>(i), p_), p_),
                                     pow_mod(y, static_cast<std::uint64_t>(degree() - i), p_), p_);
        acc = add_mod(acc, term, p_);
    }
    return acc;
}

bool BinaryForm::is_in_powers(int k) const noexcept {
    for (int i = 0; i <= degree(); ++i)
        if (coeff(i) != 0 && (i % k != 0 || (degree() - i) % k != 0)) return false;
    return true;
}

std::string BinaryForm::to_string(char x, char y) const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const residue c = coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        const int j = degree() - i;
        if (c != 1 || (i == 0 && j == 0)) os << c;
        if (i > 0) os << x << (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) os << y << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return first ? "0" : os.str();
}

BinaryForm normalized(const BinaryForm& f) {
    if (f.is_zero()) return f;
    return f.scaled(inv_mod(f.coeff(f.degree() - f.y_valuation()), f.modulus()));
}

BinaryForm polynomial_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("gcd over different fields");
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw std::invalid_argument("undefined gcd");
    if (fz) return normalized(g);
    if (gz) return normalized(f);

    const residue p = f.modulus();
    // Strip the Y-power, then dehomogenize at Y = 1; the remaining parts have
    // nonzero top X-coefficient so no roots at infinity are lost.
    const int a = f.y_valuation(), b = g.y_valuation();
    const upoly fu(f.coeffs().begin(), f.coeffs().end() - a);
    const upoly gu(g.coeffs().begin(), g.coeffs().end() - b);
    const upoly h = poly_gcd(fu, gu, p);

    const int r = static_cast<int>(h.size()) - 1;
    const int y_part = std::min(a, b);
    BinaryForm out(f.modulus(), r + y_part);
    for (int i = 0; i <= r; ++i) out.set_coeff(i, h[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace frobper
