// Timing comparison of the OpenMP-parallel tropical matrix product against
// the serial reference, with a correctness cross-check per size.

#include <chrono>
#include <cstdio>
#include <random>

#include "plactic/rng.hpp"
#include "plactic/tropical.hpp"

using namespace plactic;

namespace {

TropMatrix random_matrix(int dim, uint64_t seed) {
    auto rng = trial_rng(seed, 0);
    std::uniform_int_distribution<long> val(-100, 100);
    std::uniform_int_distribution<int> inf(0, 3);  // 1 in 4 entries is -inf
    TropMatrix M = TropMatrix::square(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (inf(rng) != 0) M.at(i, j) = TropValue(val(rng));
    return M;
}

template <typename F>
double time_best_of(int reps, const F& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

}  // namespace

int main() {
    std::printf("%8s %12s %12s %8s\n", "dim", "serial (s)", "parallel (s)", "speedup");
    for (int dim : {16, 32, 64, 128, 256, 512}) {
        TropMatrix A = random_matrix(dim, 1);
        TropMatrix B = random_matrix(dim, 2);
        TropMatrix serial = mat_mul_serial(A, B);
        TropMatrix parallel = mat_mul(A, B);
        if (serial != parallel) {
            std::fprintf(stderr, "mismatch between serial and parallel product at dim %d\n", dim);
            return 1;
        }
        int reps = dim <= 128 ? 20 : 5;
        double ts = time_best_of(reps, [&] { (void)mat_mul_serial(A, B); });
        double tp = time_best_of(reps, [&] { (void)mat_mul(A, B); });
        std::printf("%8d %12.6f %12.6f %7.2fx\n", dim, ts, tp, ts / tp);
    }
    return 0;
}
