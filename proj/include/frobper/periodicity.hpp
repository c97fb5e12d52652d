#pragma once

// Computational checks of the Frobenius periodicity
//     F^*(Syz(X,Y,Z)) = Syz(X^p,Y^p,Z^p) ~ Syz(X,Y,Z)(-3(p-1)/2)
// on Fermat curves X^d + Y^d = Z^d in characteristics p = -1 mod 2d, and of
// the splitting machinery behind it.
//
// The report certifies every step of the argument that reduces to a finite
// computation (sections of split bundles, a coprimality test, pointwise
// generation, twist-window dimension equality, degree bookkeeping and the
// Hilbert-Kunz consequence). It does not build an explicit isomorphism.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobper/binary_form.hpp"
#include "frobper/graded_ring.hpp"
#include "frobper/hilbert_kunz.hpp"
#include "frobper/syzygy.hpp"

namespace frobper {

enum class Characteristic {
    minus_one,  // p = -1 mod 2d: p = dk + (d-1), k odd, t = d-1
    plus_one,   // p = +1 mod 2d: p = dk + 1, k even, t = 1 (exploratory only)
};

struct PeriodicityContext {
    int d = 0;
    residue p = 0;
    int k = 0;
    int t = 0;
    int shift = 0;  // 3(p-1)/2
    Characteristic kind = Characteristic::minus_one;
    CurveRing ring;

    // Throws std::domain_error("theorem hypotheses not met") unless
    // p = -1 mod 2d (or, with allow_plus_one, p = +1 mod 2d).
    static PeriodicityContext make(int d, std::int64_t p, bool allow_plus_one = false);

    int balanced_twist() const noexcept { return (3 * static_cast<int>(p) + 1) / 2; }
    // (X^p, Y^p, (X^d+Y^d)^j)
    GeneratorList split_generators(int j) const;
    GeneratorList frobenius_generators() const;  // (X^p, Y^p, Z^p)
    GeneratorList linear_generators() const;     // (X, Y, Z)
};

// ---- splitting lemma ------------------------------------------------------

enum class SplitSource { s_k, s_k_plus_1 };

struct LevelComponent {
    int level = 0;      // Z-exponent i of the first two entries
    int h_level = 0;    // j(i) = i - t mod d
    SplitSource source = SplitSource::s_k;
    SyzygyTuple tuple;
};

// Split a syzygy (F, G, H) of (X^a1, Y^a2, Z^a3) along Z-levels. The
// components sum to the input and each is a syzygy; components with i >= t
// come from S_k, the others from S_{k+1}, where a3 = dk + t. Throws
// std::invalid_argument if the input is not a syzygy.
std::vector<LevelComponent> decompose_syzygy(const CurveRing& ring, const SyzygyTuple& s, int a1, int a2, int a3);

struct LemmaMapResult {
    int m = 0;
    std::size_t dim_s_k = 0;          // sections of S_k(m - t)
    std::size_t dim_s_k1 = 0;         // sections of S_{k+1}(m)
    std::size_t target_dim = 0;       // sections of Syz(X^a1, Y^a2, Z^a3)(m)
    std::size_t image_rank = 0;
    std::size_t image_rank_s_k = 0;
    std::size_t image_rank_s_k1 = 0;

    bool surjective() const noexcept { return image_rank == target_dim; }
    bool injective_on_summands() const noexcept {
        return image_rank_s_k == dim_s_k && image_rank_s_k1 == dim_s_k1;
    }
};

// Global sections of S_k(m-t) + S_{k+1}(m) -> Syz(X^a1, Y^a2, Z^a3)(m) with
// S_j = Syz(X^a1, Y^a2, P^j), a3 = dk + t.
LemmaMapResult lemma_map_phi(const CurveRing& ring, int a1, int a2, int a3, int m);

// ---- the distinguished section -----------------------------------------

struct DistinguishedSection {
    // Syzygy (F X, G Y, H) of (X^p, Y^p, (X^d+Y^d)^k), or for the plus_one
    // variant (F Y, G X, H X Y) of (X^p, Y^p, (X^d+Y^d)^{k+1}).
    std::array<BinaryForm, 3> components;
    BinaryForm h_core;   // H before any extra X Y factor; a form in X^d, Y^d
    int total_degree = 0;
    std::size_t p1_kernel_dim = 0;
};

// Computes the kernel on the projective line, substitutes U = X^d, V = Y^d and
// multiplies by the linear factors. Normalized so that the first nonzero
// coefficient of the last component (lowest X power first) is 1. Throws
// std::runtime_error("step 1 failed") if the kernel is not one-dimensional
// (minus_one case) or empty (plus_one case).
DistinguishedSection distinguished_section(const PeriodicityContext& ctx);

// The section satisfies its syzygy identity in R, H lies in F_p[X^d, Y^d].
bool check_section_invariants(const PeriodicityContext& ctx, const DistinguishedSection& s);

// gcd(last component, X^d + Y^d) == 1
bool step2_gcd_check(const DistinguishedSection& s, int d);

struct Step1Result {
    int s_k_twist = 0;
    std::size_t s_k_at = 0, s_k_below = 0, s_k_expected = 0;
    int s_k1_twist = 0;
    std::size_t s_k1_at = 0, s_k1_below = 0, s_k1_expected = 0;
    bool ok = false;
};

// minus_one: S_k((3p+1)/2 - t) = O(-d+2) + O and S_{k+1}((3p+1)/2) = O^2,
// read off as section counts at the twist and one below. plus_one: the roles
// of S_k and S_{k+1} swap.
Step1Result step1_splitting_check(const PeriodicityContext& ctx);

struct WindowRow {
    int m = 0;
    std::size_t lhs = 0;  // h0(Syz(X^p,Y^p,Z^p)(m))
    std::size_t rhs = 0;  // h0(Syz(X,Y,Z)(m - shift))
};

struct WindowResult {
    std::vector<WindowRow> rows;
    bool ok = false;
};

WindowResult twist_window_check(const PeriodicityContext& ctx, int lo, int hi);

enum class GenerationMode { paper_reduction, exhaustive };
enum class CheckVerdict { verified, failed, inconclusive };
std::string to_string(GenerationMode m);
std::string to_string(CheckVerdict v);

struct GenerationResult {
    GenerationMode mode = GenerationMode::paper_reduction;
    CheckVerdict verdict = CheckVerdict::inconclusive;
    bool z_nonzero_by_argument = true;            // points with z != 0
    std::optional<int> zero_piece_degree;         // exhaustive: R/I vanishes here
    std::optional<std::array<residue, 3>> common_zero;  // exhaustive: F_p-point where all minors vanish
};

// Pointwise generation of Syz(X^p,Y^p,Z^p)((3p+1)/2) by the distinguished
// section and the two sections of S_{k+1}((3p+1)/2).
GenerationResult generation_check(const PeriodicityContext& ctx, GenerationMode mode);

// Exhaustive test for three sections of a rank-2 syzygy bundle: all 2x2
// minors of their component matrix, then search for an F_p-rational common
// zero on the curve (failed) and for a vanishing graded piece of R/(minors)
// up to degree cap (verified). Otherwise inconclusive.
GenerationResult minors_generation_check(const CurveRing& ring, const std::array<SyzygyTuple, 3>& sections, int cap);

struct Steps45Result {
    std::int64_t degree_at_balanced_twist = 0;  // must equal d
    std::int64_t twist_ledger = 0;              // 3p - (3p+1)/2 - 1
    bool ok = false;
};

Steps45Result steps45_bookkeeping(const PeriodicityContext& ctx);

struct DoubleCoverResult {
    int curve_degree = 0;
    int shift = 0;  // 3(p-1)
    WindowResult window;
    std::int64_t balanced_degree = 0;      // deg Syz(U^2,V^2,W^2)(3)
    std::size_t sections_at_three = 0;     // h0 of the same
    bool ok = false;
};

// Example on the degree-2d Fermat curve: h0(Syz(U^2p,V^2p,W^2p)(m)) equals
// h0(Syz(U^2,V^2,W^2)(m - 3(p-1))). Window defaults to [0, 6p+6].
DoubleCoverResult double_cover_check(int d, std::int64_t p, std::optional<std::pair<int, int>> window = std::nullopt);

struct Char2Result {
    std::size_t q2_at_3 = 0, q2_at_2 = 0, q4_at_6 = 0;
    WindowResult q8_vs_q4;
    bool ok = false;
};

// Fermat cubic in characteristic 2.
Char2Result char2_cubic_suite();

struct VerifyOptions {
    std::optional<std::pair<int, int>> window;  // default [0, 3p+3]
    GenerationMode generation = GenerationMode::paper_reduction;
    bool exploratory = false;
    bool check_hk = true;
};

struct HKConsistency {
    std::int64_t phi = 0;
    std::optional<Rational> formula;
    std::optional<bool> match;
};

struct PeriodicityReport {
    explicit PeriodicityReport(PeriodicityContext c) : ctx(std::move(c)) {}

    PeriodicityContext ctx;
    bool exploratory = false;
    Step1Result step1;
    std::optional<DistinguishedSection> section;
    bool section_invariants = false;
    bool gcd_ok = false;
    std::optional<GenerationResult> step3;
    WindowResult window;
    Steps45Result steps45;
    std::optional<HKConsistency> hk;
    std::optional<bool> overall;  // absent for exploratory runs
};

PeriodicityReport verify_theorem(int d, std::int64_t p, const VerifyOptions& options = {});

}  // namespace frobper
