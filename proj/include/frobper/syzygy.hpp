#pragma once

// Sections of twisted syzygy bundles on the curve and on the projective line.
//
// Sections of Syz(f_1..f_n)(m) are computed as degree-m syzygies of the
// graded ring: the kernel of  (+)_i R_{m - d_i} -> R_m,  (s_i) -> sum s_i f_i.
// This identification uses projective normality of smooth plane curves.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobper/binary_form.hpp"
#include "frobper/ff_linalg.hpp"
#include "frobper/graded_ring.hpp"

namespace frobper {

// Homogeneous generators f_1..f_n (n >= 2) of one ring. R_+-primary-ness is
// assumed by callers, not checked. Degree 0 generators are accepted so that
// Syz(X^a, Y^b, P^0) can be formed.
class GeneratorList {
public:
    GeneratorList(CurveRing ring, std::vector<GradedElement> gens);

    // (X^a1, Y^a2, Z^a3)
    static GeneratorList monomial_powers(const CurveRing& ring, int a1, int a2, int a3);

    const CurveRing& ring() const noexcept { return ring_; }
    const std::vector<GradedElement>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    std::vector<int> degrees() const;

private:
    CurveRing ring_;
    std::vector<GradedElement> gens_;
};

using SyzygyTuple = std::vector<GradedElement>;

struct SyzygySpace {
    int m = 0;
    std::vector<SyzygyTuple> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

// Stacked multiplication matrix [mult(f_1, m-d_1) | ... | mult(f_n, m-d_n)].
FpMatrix syzygy_matrix(const GeneratorList& gens, int m);

std::size_t syzygy_dim(const GeneratorList& gens, int m);
// syzygy_dim for every m in [lo, hi], evaluated concurrently.
std::vector<std::size_t> syzygy_dims(const GeneratorList& gens, int lo, int hi);

// Kernel basis in RREF over the concatenated coordinates, lifted to tuples.
SyzygySpace syzygy_basis(const GeneratorList& gens, int m);

// Flatten a tuple to concatenated coordinates, and back.
std::vector<residue> flatten(const SyzygyTuple& s);
SyzygyTuple unflatten(const GeneratorList& gens, int m, std::span<const residue> coords);

// sum s_i f_i == 0, with component degrees m - d_i.
bool is_syzygy(const GeneratorList& gens, const SyzygyTuple& s);

// Degree of Syz(f_1..f_n)(m) on a curve of degree d: ((n-1) m - sum d_i) d.
std::int64_t bundle_degree(int d, std::span<const int> gen_degrees, int m);

// Rank-2 bundle O(-a) + O(-b) on the projective line, a <= b.
struct SplittingType {
    int a = 0;
    int b = 0;
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

// Syzygies over F_p[U,V] of binary forms (the projective line).
FpMatrix p1_syzygy_matrix(std::span<const BinaryForm> forms, int m);
std::size_t p1_syzygy_dim(std::span<const BinaryForm> forms, int m);
std::vector<std::vector<BinaryForm>> p1_syzygy_basis(std::span<const BinaryForm> forms, int m);

// Splitting type of Syz(f_1, f_2, f_3) on the projective line. Throws
// std::invalid_argument("not R_+-primary") when the three forms share a
// factor, and std::logic_error if the section profile does not match the
// split model on [0, a + b + 2].
SplittingType splitting_type_p1(std::span<const BinaryForm> forms);

// Section dimensions of O(-a) + O(-b) twisted by m on the projective line.
std::size_t split_profile(const SplittingType& t, int m) noexcept;

struct InstabilityWitness {
    int m = 0;
    std::int64_t degree = 0;
    SyzygyTuple section;
};

// Smallest m in [m_lo, m_hi] at which Syz(f_1, f_2, f_3)(m) has negative
// degree and a nonzero section. A witness proves non-semistability; no
// witness proves nothing.
std::optional<InstabilityWitness> instability_witness(const GeneratorList& gens, int m_lo, int m_hi);

}  // namespace frobper
