// Compares the serial reference kernels against the OpenMP paths and checks
// they agree. Build and run: ./gjms_bench [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "gjms/asymptotic.hpp"
#include "gjms/fields.hpp"
#include "gjms/flat_chart.hpp"
#include "gjms/parallel.hpp"
#include "gjms/rng.hpp"
#include "gjms/space_forms.hpp"

using namespace gjms;

namespace {

double time_once(const std::function<double()>& fn, int repeats, double* value) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    *value = fn();
    best = std::min(best,
                    std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count());
  }
  return best;
}

void report(const std::string& name, double serial_s, double parallel_s,
            double vs, double vp) {
  const double rel = std::abs(vs - vp) / std::max(std::abs(vs), 1e-300);
  std::printf("%-34s serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   rel-diff %.2e\n",
              name.c_str(), 1e3 * serial_s, 1e3 * parallel_s,
              serial_s / parallel_s, rel);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads available: %d\n", max_threads());

  {
    const DimPair dims{5, 2};
    const ScalarField test = bump_field(5, 0.8, 12, Vec(), 1.0);
    const DiracGrid grid = dirac_grid_preset(5, 2, 1);
    double vs = 0.0, vp = 0.0;
    const double ts = time_once(
        [&] { return dirac_pairing(dims, test, grid, Exec::Serial); }, repeats,
        &vs);
    const double tp = time_once(
        [&] { return dirac_pairing(dims, test, grid, Exec::Parallel); },
        repeats, &vp);
    report("dirac_pairing (n=5, k=2)", ts, tp, vs, vp);
  }

  {
    Rng rng(1);
    const SpherePoint xi(rng.unit_vec(6));
    const BlowupProfile profile =
        space_form_blowup(lens_group(2, {1, 1, 1}), xi, {5, 2});
    const std::vector<double> radii{20.0, 40.0};
    FluxOptions opts;
    opts.polar_nodes = 12;
    opts.azimuthal_nodes = 24;
    double vs = 0.0, vp = 0.0;
    const double ts = time_once(
        [&] {
          return mk_surface_integral(profile, radii, opts, Exec::Serial).value;
        },
        repeats, &vs);
    const double tp = time_once(
        [&] {
          return mk_surface_integral(profile, radii, opts, Exec::Parallel).value;
        },
        repeats, &vp);
    report("m2 surface integral (RP5)", ts, tp, vs, vp);
  }

  {
    const SpaceFormGroup group = lens_group(7, {1, 2});
    Rng rng(2);
    std::vector<SpherePoint> pts;
    for (int i = 0; i < 4000; ++i) pts.emplace_back(rng.unit_vec(4));
    const auto scan = [&](Exec exec) {
      std::vector<double> out(pts.size());
      parallel_for(
          pts.size(),
          [&](std::size_t i) { out[i] = hj_scalar_curvature(group, pts[i]); },
          exec);
      double sum = 0.0;
      for (double v : out) sum += v;
      return sum;
    };
    double vs = 0.0, vp = 0.0;
    const double ts = time_once([&] { return scan(Exec::Serial); }, repeats, &vs);
    const double tp = time_once([&] { return scan(Exec::Parallel); }, repeats, &vp);
    report("canonical-metric scan (4000 pts)", ts, tp, vs, vp);
  }

  return 0;
}
