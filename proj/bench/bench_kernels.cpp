// Timing comparison of the OpenMP kernels against the serial reference.
// Every kernel is run both ways and the outputs are compared, so the bench
// doubles as a smoke test that the parallel path changes nothing but time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hemifill/areas.hpp"
#include "hemifill/barycenter.hpp"
#include "hemifill/curve.hpp"
#include "hemifill/embedding.hpp"
#include "hemifill/norms.hpp"
#include "hemifill/parallel.hpp"
#include "hemifill/rng.hpp"

using namespace hemifill;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel,
            bool identical) {
  std::printf("%-22s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              name.c_str(), serial, parallel,
              parallel > 0.0 ? serial / parallel : 0.0,
              identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
  std::printf("workers: %d (openmp %s)\n\n", par::worker_count(),
              par::openmp_enabled() ? "on" : "off");

  {
    IsometryReport a, b;
    const double ts =
        seconds([&] { a = verify_isometry(150, 1024, 1234, false); });
    const double tp =
        seconds([&] { b = verify_isometry(150, 1024, 1234, true); });
    report("verify_isometry", ts, tp,
           a.max_error == b.max_error && a.mean_error == b.mean_error);
  }

  {
    const LipschitzCurve curve = LipschitzCurve::fourier(
        NormedTarget::l2(2),
        {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.15}},
         {{0.0, 0.0}, {0.0, 1.0}, {0.1, 0.0}}});
    const HemisphereMap map(curve, 2048);
    LipschitzReport a, b;
    const double ts =
        seconds([&] { a = certify_lipschitz(map, 3000, 1234, false); });
    const double tp =
        seconds([&] { b = certify_lipschitz(map, 3000, 1234, true); });
    report("certify_lipschitz", ts, tp, a.max_ratio == b.max_ratio);
  }

  {
    const MappedSurface id = hemisphere_identity_surface();
    const std::vector<JacobianKind> kinds = {JacobianKind::Busemann,
                                             JacobianKind::HolmesThompson,
                                             JacobianKind::InscribedRiemannian};
    std::vector<AreaResult> a, b;
    const double ts = seconds(
        [&] { a = area_multi(id, kinds, ChartDomain::disc(), 48, 96, 1e-2, false); });
    const double tp = seconds(
        [&] { b = area_multi(id, kinds, ChartDomain::disc(), 48, 96, 1e-2, true); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].area == b[i].area;
    }
    report("area_multi", ts, tp, same);
  }

  {
    // polygon jacobian sweep, the kernel behind the mahler csv
    auto sweep = [](std::vector<double>& mins) {
      mins = {1e300, 1e300, 1e300};
      for (std::size_t i = 0; i < 4000; ++i) {
        Rng rng(mix_seed(1234, 3000000 + i));
        const std::size_t m = 2 + static_cast<std::size_t>(rng.below(7));
        std::vector<Vec2> pts(m);
        for (auto& p : pts) {
          const double r = rng.uniform(0.3, 3.0);
          const double t = rng.angle();
          p = {r * std::cos(t), r * std::sin(t)};
        }
        const PlanarNorm body = PlanarNorm::polygon(pts);
        if (body.degenerate()) continue;
        const double jb = jacobian_busemann(body);
        const double jht = jacobian_holmes_thompson(body);
        const double jir = jacobian_inscribed(body);
        mins[0] = std::min(mins[0], jht / jb);
        mins[1] = std::min(mins[1], jb / jir);
        mins[2] = std::min(mins[2], jht / jir);
      }
    };
    std::vector<double> a, b;
    const double ts = seconds([&] { sweep(a); });
    const double tp = seconds([&] { sweep(b); });  // same serial kernel twice
    report("jacobian sweep", ts, tp, a == b);
    std::printf("\nmahler minima: ht/b %.6f (8/pi^2 %.6f), b/ir %.6f "
                "(pi/4 %.6f), ht/ir %.6f (2/pi %.6f)\n",
                a[0], 8.0 / (kPi * kPi), a[1], kPi / 4.0, a[2], 2.0 / kPi);
  }

  return 0;
}
