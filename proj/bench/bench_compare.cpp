// Timing harness comparing the serial reference kernels with their
// OpenMP-parallel versions. Both must produce identical exact results;
// the unit tests enforce that, this binary reports the speed.

#include <chrono>
#include <iostream>

#include "severi/hirzebruch.hpp"
#include "severi/resultant.hpp"
#include "severi/selftest.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace severi;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_s(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_spanning_trees() {
    // 20-edge model: 2^20 subset masks
    const DegenerateModel model = build_cx_default({2, 4, 2});
    const Multigraph g = dual_graph(model);
    std::cout << "spanning-tree sweep over " << g.edges.size() << " edges ("
              << (1u << g.edges.size()) << " masks)\n";
    mpz_class serial, parallel;
    const double ts = time_s([&] { serial = spanning_tree_count_serial(g); });
    const double tp = time_s([&] { parallel = spanning_tree_count_parallel(g); });
    std::cout << "  serial:   " << ts << " s -> " << serial.get_str() << "\n";
    std::cout << "  parallel: " << tp << " s -> " << parallel.get_str() << "\n";
    std::cout << "  matrix-tree check: " << spanning_tree_count_matrix_tree(g).get_str() << "\n";
    if (serial != parallel) std::cout << "  MISMATCH\n";
}

void bench_determinant() {
    SplitMix64 rng(42);
    const WeierstrassPoly P = selftest::random_wpoly(rng, 7, 10, true);
    const auto m = sylvester_matrix(P.a, P.dw().a);
    std::cout << "Sylvester determinant " << m.size() << "x" << m.size()
              << ", entry degrees <= 10\n";
    RationalPoly serial, parallel;
    const double ts = time_s([&] { serial = det_eval_interp(m, /*parallel=*/false); });
    const double tp = time_s([&] { parallel = det_eval_interp(m, /*parallel=*/true); });
    std::cout << "  eval-interp serial:   " << ts << " s (degree " << serial.degree() << ")\n";
    std::cout << "  eval-interp parallel: " << tp << " s\n";
    if (serial != parallel) std::cout << "  MISMATCH\n";
    const double tb = time_s([&] { parallel = det_bareiss(m); });
    std::cout << "  bareiss reference:    " << tb << " s\n";
    if (serial != parallel) std::cout << "  MISMATCH vs bareiss\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled: parallel kernels run their serial path\n";
#endif
    bench_spanning_trees();
    bench_determinant();
    return 0;
}
