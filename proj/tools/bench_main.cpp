// Benchmark of the OpenMP kernels against their serial reference
// implementations. Both must produce identical output; the serial versions
// exist so tests can pin that down and this target can quantify the speedup.

#include "qcournot/bifurcation.hpp"
#include "qcournot/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qcournot;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool same_sweep(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].gamma != b[i].gamma || a[i].count != b[i].count)
            return false;
        for (std::size_t j = 0; j < a[i].equilibria.size(); ++j) {
            if (a[i].equilibria[j].quantities.q1 != b[i].equilibria[j].quantities.q1 ||
                a[i].equilibria[j].quantities.q2 != b[i].equilibria[j].quantities.q2)
                return false;
        }
    }
    return true;
}

bool same_points(const std::vector<QuantityPair>& a, const std::vector<QuantityPair>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].q1 != b[i].q1 || a[i].q2 != b[i].q2)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int steps = 512;
    int cells = 1200;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--steps")
            steps = std::atoi(argv[i + 1]);
        else if (flag == "--cells")
            cells = std::atoi(argv[i + 1]);
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    ModelParams mp(3, 5, 10);

    {
        auto t0 = clock_type::now();
        auto serial = sweep_serial(mp, 0.0, 1.0, steps);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = sweep(mp, 0.0, 1.0, steps);
        const double t_parallel = ms_since(t0);
        std::printf("sweep   steps=%-5d serial %8.2f ms   parallel %8.2f ms   "
                    "speedup %.2fx   identical %s\n",
                    steps, t_serial, t_parallel, t_serial / t_parallel,
                    same_sweep(serial, parallel) ? "yes" : "NO");
    }

    {
        EntangledGame game(mp, 0.285);
        GridSpec grid{0.0, 6.0, cells};
        auto t0 = clock_type::now();
        auto serial = grid_equilibria_serial(game, grid);
        const double t_serial = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = grid_equilibria(game, grid);
        const double t_parallel = ms_since(t0);
        std::printf("oracle  cells=%-5d serial %8.2f ms   parallel %8.2f ms   "
                    "speedup %.2fx   identical %s\n",
                    cells, t_serial, t_parallel, t_serial / t_parallel,
                    same_points(serial, parallel) ? "yes" : "NO");
    }
    return 0;
}
