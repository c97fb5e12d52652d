#pragma once

// Prime field arithmetic and dense elimination over F_p.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace frobper {

using residue = std::uint32_t;

// A prime modulus. Checked by trial division at construction; values must
// stay below 2^31 so that products of two residues fit in 64 bits.
class Prime {
public:
    explicit Prime(std::int64_t value);

    residue value() const noexcept { return value_; }
    operator residue() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    residue value_;
};

bool is_prime(std::int64_t n) noexcept;

inline residue add_mod(residue a, residue b, residue p) noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<residue>(s >= p ? s - p : s);
}

inline residue sub_mod(residue a, residue b, residue p) noexcept {
    return a >= b ? a - b : a + (p - b);
}

inline residue neg_mod(residue a, residue p) noexcept { return a == 0 ? 0 : p - a; }

inline residue mul_mod(residue a, residue b, residue p) noexcept {
    return static_cast<residue>(std::uint64_t{a} * b % p);
}

residue pow_mod(residue base, std::uint64_t exp, residue p) noexcept;

// Inverse of a nonzero residue; throws std::domain_error on zero.
residue inv_mod(residue a, residue p);

// Least nonnegative representative of an arbitrary signed integer.
residue reduce_signed(std::int64_t v, residue p) noexcept;

// Dense row-major matrix over F_p. Dimensions are fixed at construction and
// every stored entry is kept in [0, p).
class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t rows, std::size_t cols);
    FpMatrix(Prime p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static FpMatrix identity(Prime p, std::size_t n);
    // Takes ownership of row-major data; entries must already lie in [0, p).
    static FpMatrix from_data(Prime p, std::size_t rows, std::size_t cols, std::vector<residue> data);

    Prime modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept {
        data_[r * cols_ + c] = reduce_signed(v, p_);
    }
    void add_to(std::size_t r, std::size_t c, residue v) noexcept {
        auto& x = data_[r * cols_ + c];
        x = add_mod(x, v, p_);
    }

    std::span<const residue> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    FpMatrix operator*(const FpMatrix& rhs) const;
    std::vector<residue> apply(std::span<const residue> v) const;

    // Horizontal concatenation [this | rhs]; row counts must agree.
    FpMatrix hconcat(const FpMatrix& rhs) const;
    FpMatrix transposed() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<residue> data_;
};

// Row rank. The elimination scans columns left to right and takes the first
// row (top to bottom) with a nonzero entry as pivot. Row updates below the
// pivot run in parallel and use delayed modular reduction.
std::size_t rank(const FpMatrix& m);

// Reference implementation: same pivot order, one reduction per operation,
// no threading. Kept for tests and benchmarks.
std::size_t rank_serial(const FpMatrix& m);

// Reduced row-echelon form (same pivoting order) and its pivot columns.
struct Echelon {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon rref(const FpMatrix& m);

// Basis of {v : M v = 0}. The returned rows are the reduced row-echelon form
// of the kernel, ordered by pivot column, so the basis is canonical for the
// subspace. Size is cols - rank.
std::vector<std::vector<residue>> kernel_basis(const FpMatrix& m);

}  // namespace frobper
