// Compares the serial reference elimination against the OpenMP kernels on
// synthetic matrices and on a real relation-matrix workload.

#include <chrono>
#include <cstdio>
#include <random>

#include "adem/fp_matrix.hpp"
#include "adem/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace adem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

linalg::GF2Mat random_gf2(size_t rows, size_t cols, uint64_t seed)
{
    linalg::GF2Mat m(rows, cols);
    std::mt19937_64 rng(seed);
    for (size_t r = 0; r < rows; ++r) {
        uint64_t* w = m.row(r);
        for (size_t j = 0; j < m.words_per_row(); ++j)
            w[j] = rng();
    }
    return m;
}

linalg::FpMat random_fp(int p, size_t rows, size_t cols, uint64_t seed)
{
    linalg::FpMat m(p, rows, cols);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<uint8_t>(dist(rng)));
    return m;
}

template <typename M>
void bench_pair(const char* name, const M& matrix)
{
    auto t0 = Clock::now();
    size_t rs = linalg::rank(matrix, linalg::Exec::Serial);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    size_t rp = linalg::rank(matrix, linalg::Exec::Parallel);
    double tp = seconds_since(t0);
    std::printf("%-28s rank %zu%s  serial %8.3fs  openmp %8.3fs  speedup %.2fx\n", name, rs,
                rs == rp ? "" : " [MISMATCH]", ts, tp, tp > 0 ? ts / tp : 0.0);
}

}  // namespace

int main(int argc, char** argv)
{
    uint64_t seed = 20240917;
    if (argc > 1)
        seed = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled in this build\n");
#endif

    bench_pair("gf2 random 3000x6000", random_gf2(3000, 6000, seed));
    bench_pair("gf2 random 1500x1500", random_gf2(1500, 1500, seed + 1));
    bench_pair("f3 random 900x900", random_fp(3, 900, 900, seed + 2));
    bench_pair("f5 random 700x700", random_fp(5, 700, 700, seed + 3));

    {
        auto rm = oracle::relation_rows(2, 12);
        std::printf("relation matrix p=2 k=12: %zu rows x %zu cols\n", rm.row_count(),
                    rm.columns.size());
        auto t0 = Clock::now();
        size_t rs = rm.rank(linalg::Exec::Serial);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        size_t rp = rm.rank(linalg::Exec::Parallel);
        double tp = seconds_since(t0);
        std::printf("%-28s rank %zu%s  serial %8.3fs  openmp %8.3fs  speedup %.2fx\n",
                    "relation rows p=2 k=12", rs, rs == rp ? "" : " [MISMATCH]", ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }

    {
        auto t0 = Clock::now();
        auto rep_s = oracle::verify_basis(3, 40, linalg::Exec::Serial);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto rep_p = oracle::verify_basis(3, 40, linalg::Exec::Parallel);
        double tp = seconds_since(t0);
        std::printf("%-28s %s  serial %8.3fs  openmp %8.3fs  speedup %.2fx\n",
                    "verify sweep p=3 k<=40", rep_s.ok() && rep_p.ok() ? "ok" : "MISMATCH", ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
