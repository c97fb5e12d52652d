#include "frobper/ff_linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace frobper {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

Prime::Prime(std::int64_t value) {
    if (value >= (std::int64_t{1} << 31) || !is_prime(value))
        throw std::invalid_argument("not a usable prime: " + std::to_string(value));
    value_ = static_cast<residue>(value);
}

residue pow_mod(residue base, std::uint64_t exp, residue p) noexcept {
    std::uint64_t r = 1 % p;
    std::uint64_t b = base % p;
    while (exp) {
        if (exp & 1) r = r * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<residue>(r);
}

residue inv_mod(residue a, residue p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return reduce_signed(s0, p);
}

residue reduce_signed(std::int64_t v, residue p) noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<residue>(r);
}

FpMatrix::FpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : p_(p), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (auto v : r) data_.push_back(reduce_signed(v, p_));
    }
}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p.value();
    return m;
}

FpMatrix FpMatrix::from_data(Prime p, std::size_t rows, std::size_t cols, std::vector<residue> data) {
    if (data.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    if (std::any_of(data.begin(), data.end(), [&](residue x) { return x >= p.value(); }))
        throw std::invalid_argument("matrix entry not reduced");
    FpMatrix m(p, 0, 0);
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("matrix product shape mismatch");
    FpMatrix out(p_, rows_, rhs.cols_);
    const residue p = p_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const residue a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                auto& o = out.data_[i * rhs.cols_ + j];
                o = add_mod(o, mul_mod(a, rhs.data_[k * rhs.cols_ + j], p), p);
            }
        }
    return out;
}

std::vector<residue> FpMatrix::apply(std::span<const residue> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<residue> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{data_[i * cols_ + j]} * v[j]) % p_;
        out[i] = static_cast<residue>(acc);
    }
    return out;
}

FpMatrix FpMatrix::hconcat(const FpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("hconcat shape mismatch");
    FpMatrix out(p_, rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::copy_n(data_.begin() + i * cols_, cols_, out.data_.begin() + i * out.cols_);
        std::copy_n(rhs.data_.begin() + i * rhs.cols_, rhs.cols_, out.data_.begin() + i * out.cols_ + cols_);
    }
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

std::size_t rank(const FpMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    const std::uint64_t p = m.modulus().value();

    // Rows live as unreduced 64-bit accumulators. Each update adds f * x with
    // f, x < p, so a row absorbs `budget` updates before it must be reduced.
    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t budget = sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                                         : (std::numeric_limits<std::uint64_t>::max() - p) / sq;

    std::vector<std::uint64_t> work(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) work[i * cols + j] = m(i, j);
    std::vector<std::uint64_t> pending(rows, 0);

    auto reduce_row = [&](std::size_t r, std::size_t from) {
        std::uint64_t* row = work.data() + r * cols;
        for (std::size_t j = from; j < cols; ++j) row[j] %= p;
        pending[r] = 0;
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            auto& x = work[i * cols + c];
            x %= p;
            if (x != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r) {
            std::swap_ranges(work.begin() + piv * cols + c, work.begin() + piv * cols + cols,
                             work.begin() + r * cols + c);
            std::swap(pending[piv], pending[r]);
        }
        reduce_row(r, c);
        const std::uint64_t* prow = work.data() + r * cols;
        const std::uint64_t neg_inv = p - inv_mod(static_cast<residue>(prow[c]), static_cast<residue>(p));

        const auto lo = static_cast<std::ptrdiff_t>(r + 1);
        const auto hi = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if ((hi - lo) * static_cast<std::ptrdiff_t>(cols - c) > 16384)
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            std::uint64_t* row = work.data() + static_cast<std::size_t>(i) * cols;
            const std::uint64_t x = row[c] % p;
            if (x == 0) {
                row[c] = 0;
                continue;
            }
            if (pending[i] >= budget) reduce_row(static_cast<std::size_t>(i), c);
            const std::uint64_t f = x * neg_inv % p;
            for (std::size_t j = c; j < cols; ++j) row[j] += f * prow[j];
            ++pending[i];
        }
        ++r;
    }
    return r;
}

std::size_t rank_serial(const FpMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const residue p = m.modulus();
    std::vector<residue> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const residue inv = inv_mod(a[r * cols + c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const residue f = mul_mod(a[i * cols + c], inv, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = sub_mod(a[i * cols + j], mul_mod(f, a[r * cols + j], p), p);
        }
        ++r;
    }
    return r;
}

Echelon rref(const FpMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const residue p = m.modulus();
    std::vector<residue> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        std::copy(m.row(i).begin(), m.row(i).end(), a.begin() + i * cols);
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + piv * cols, a.begin() + piv * cols + cols, a.begin() + r * cols);
        residue* prow = a.data() + r * cols;
        const residue inv = inv_mod(prow[c], p);
        for (std::size_t j = c; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            residue* row = a.data() + i * cols;
            const residue f = row[c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {FpMatrix::from_data(m.modulus(), rows, cols, std::move(a)), std::move(pivots)};
}

std::vector<std::vector<residue>> kernel_basis(const FpMatrix& m) {
    const std::size_t cols = m.cols();
    const residue p = m.modulus();
    const Echelon e = rref(m);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    // One vector per free column: 1 there, minus the RREF column on pivots.
    const std::size_t nfree = cols - e.pivots.size();
    if (nfree == 0) return {};
    FpMatrix raw(m.modulus(), nfree, cols);
    std::size_t row = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        raw.set(row, f, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            raw.set(row, e.pivots[i], neg_mod(e.reduced(i, f), p));
        ++row;
    }

    const Echelon k = rref(raw);
    std::vector<std::vector<residue>> out(nfree);
    for (std::size_t i = 0; i < nfree; ++i) out[i].assign(k.reduced.row(i).begin(), k.reduced.row(i).end());
    return out;
}

}  // namespace frobper
