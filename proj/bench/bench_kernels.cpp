#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "frobper/ff_linalg.hpp"
#include "frobper/hilbert_kunz.hpp"

using namespace frobper;

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937 rng(2024);
    std::printf("%-10s %6s %10s %10s %8s\n", "p", "n", "serial_s", "omp_s", "speedup");
    for (std::int64_t pv : {3, 65521, 2147483647}) {
        const Prime p(pv);
        for (std::size_t n : {200, 400, 800}) {
            FpMatrix m(p, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % p.value()));
            std::size_t r1 = 0, r2 = 0;
            const double ts = seconds([&] { r1 = rank_serial(m); });
            const double tp = seconds([&] { r2 = rank(m); });
            if (r1 != r2) {
                std::printf("rank mismatch at p=%lld n=%zu\n", static_cast<long long>(pv), n);
                return 1;
            }
            std::printf("%-10lld %6zu %10.4f %10.4f %8.2f\n", static_cast<long long>(pv), n, ts, tp, ts / tp);
        }
    }

    std::printf("\n%-4s %-4s %-4s %12s %12s\n", "d", "p", "q", "exhaustive_s", "profile_s");
    for (auto [d, pv, q] : {std::tuple{3, 11, 121}, {4, 7, 49}, {5, 19, 19}}) {
        const CurveRing ring(Prime(pv), d);
        std::vector<std::size_t> a, b;
        const double te = seconds([&] { a = colength_profile_exhaustive(ring, q); });
        const double tp = seconds([&] { b = colength_profile(ring, q); });
        std::printf("%-4d %-4d %-4d %12.4f %12.4f\n", d, pv, q, te, tp);
    }
    return 0;
}
