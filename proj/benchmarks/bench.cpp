// Serial vs OpenMP timings for the three data-parallel kernels:
// consequence elimination, exhaustive normal-form sweeps, and
// type-sequence dimension enumeration.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "malg/enumerate.hpp"
#include "malg/identity.hpp"
#include "malg/mlieadm.hpp"
#include "malg/mnov.hpp"
#include "malg/oracle.hpp"

using namespace malg;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
    const auto t0 = clk::now();
    fn();
    return seconds(t0, clk::now());
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-46s %9.3fs %9.3fs %7.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int degree = 5;
    if (argc > 1) degree = std::atoi(argv[1]);
#ifdef _OPENMP
    std::printf("threads: %d (set OMP_NUM_THREADS to change)\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif
    std::printf("%-46s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    const EliminationOptions serial{false, 256, 1};
    const EliminationOptions parallel{true, 256, 0};

    for (const char* variety : {"mnov", "lieadm", "mlieadm"}) {
        const IdentitySet ids = builtin_variety(variety);
        auto rows = generate_consequences(ids, degree);
        int rank_s = 0, rank_p = 0;
        const double ts = timed([&] {
            ConsequenceBasis cb(degree, ids.signature, ColumnRanking::default_order(), rows,
                                serial);
            rank_s = cb.rank();
        });
        const double tp = timed([&] {
            ConsequenceBasis cb(degree, ids.signature, ColumnRanking::default_order(), rows,
                                parallel);
            rank_p = cb.rank();
        });
        if (rank_s != rank_p) {
            std::fprintf(stderr, "rank mismatch for %s\n", variety);
            return 1;
        }
        row("elimination: " + std::string(variety) + " n=" + std::to_string(degree) + " (" +
                std::to_string(rows.size()) + " rows)",
            ts, tp);
    }

    {
        const auto terms = enumerate_multilinear(Signature::Star, degree);
        long z_s = 0, z_p = 0;
        const double ts = timed([&] {
            for (const Term& t : terms)
                if (nov_nf(t).is_zero()) ++z_s;
        });
        const double tp = timed([&] {
            long z = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : z)
            for (std::size_t i = 0; i < terms.size(); ++i)
                if (nov_nf(terms[i]).is_zero()) ++z;
            z_p = z;
        });
        if (z_s != z_p) {
            std::fprintf(stderr, "normal-form sweep mismatch\n");
            return 1;
        }
        row("normal-form sweep: " + std::to_string(terms.size()) + " Star terms", ts, tp);
    }

    {
        const int n = std::max(degree + 4, 9);
        mpz_class d_s, d_p;
        const double ts = timed([&] {
#ifdef _OPENMP
            const int save = omp_get_max_threads();
            omp_set_num_threads(1);
            d_s = mla_dims_enumerated(n);
            omp_set_num_threads(save);
#else
            d_s = mla_dims_enumerated(n);
#endif
        });
        const double tp = timed([&] { d_p = mla_dims_enumerated(n); });
        if (d_s != d_p) {
            std::fprintf(stderr, "dimension enumeration mismatch\n");
            return 1;
        }
        row("dimension enumeration: n=" + std::to_string(n) + " (" + d_s.get_str() + ")", ts, tp);
    }
    return 0;
}
