// Timing harness for the two parallel kernels: Hamiltonian assembly
// (row-parallel compose) and grid execution (grid_map), each against the
// serial path. Both must agree bit for bit; the serial path is the reference
// the tests pin down.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "fluxlat/circuit.hpp"
#include "fluxlat/composite.hpp"
#include "fluxlat/metrics.hpp"
#include "fluxlat/parallel.hpp"

using namespace fluxlat;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count());
    }
    return best;
}

CompositeSpec chain_spec(int keep_q, int keep_c) {
    ElementParams q;
    q.kind = ElementKind::Fluxonium;
    q.ec_ghz = 1.0;
    q.ej_ghz = 4.0;
    q.el_ghz = 0.8;
    q.keep_levels = keep_q;

    ElementParams c;
    c.kind = ElementKind::Transmon;
    c.ec_ghz = 0.2;
    c.ej_ghz = 17.0;
    c.keep_levels = keep_c;

    ElementSpectrum qs = build_element(q);
    ElementSpectrum cs = build_element(c);

    CompositeSpec spec;
    spec.elements = {cs, qs, cs, qs};
    spec.couplings = {{0, 1, 0.3}, {1, 2, 0.3}, {2, 3, 0.3}, {0, 2, 0.1}, {1, 3, 0.08}};
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    setenv("OPENBLAS_NUM_THREADS", "1", 1);
    int threads = resolve_thread_count(0);
    if (argc > 1) threads = std::max(1, std::atoi(argv[1]));

    {
        CompositeSpec spec = chain_spec(10, 5);
        printf("compose, dim %ld, serial vs %d threads\n", spec.dim(), threads);
        MatrixXcd h1, ht;
        double t_serial = time_best_of(3, [&] { h1 = compose(spec, 1); });
        double t_par = time_best_of(3, [&] { ht = compose(spec, threads); });
        bool identical = h1.rows() == ht.rows() &&
                         (h1.array() == ht.array()).all();
        printf("  serial   %8.3f ms\n", 1e3 * t_serial);
        printf("  threaded %8.3f ms   speedup %.2fx   bitwise %s\n",
               1e3 * t_par, t_serial / t_par, identical ? "equal" : "DIFFER");
        if (!identical) return 1;
    }

    {
        CompositeSpec spec = chain_spec(6, 4);
        const int n_points = 12;
        printf("grid of %d diagonalizations, dim %ld\n", n_points, spec.dim());
        std::vector<double> zz_serial(n_points), zz_par(n_points);
        auto point = [&](std::vector<double>& out, int flat) {
            CompositeSpec s = spec;
            s.couplings[3].g_ghz = -0.3 + 0.05 * flat;
            out[flat] = zz_coupler_spectator(diagonalize(s, 0.5, 1),
                                             CouplerType::C0)
                            .value;
        };
        double t_serial = time_best_of(
            1, [&] { grid_map(n_points, 1, [&](int i) { point(zz_serial, i); }); });
        double t_par = time_best_of(
            1, [&] { grid_map(n_points, threads, [&](int i) { point(zz_par, i); }); });
        bool identical = true;
        for (int i = 0; i < n_points; ++i)
            identical = identical && zz_serial[i] == zz_par[i];
        printf("  serial   %8.3f ms\n", 1e3 * t_serial);
        printf("  threaded %8.3f ms   speedup %.2fx   bitwise %s\n",
               1e3 * t_par, t_serial / t_par, identical ? "equal" : "DIFFER");
        if (!identical) return 1;
    }

    return 0;
}
