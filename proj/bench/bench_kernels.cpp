// Serial reference vs OpenMP kernels on the largest catalog groups.
// Usage: bench_kernels [repetitions] [group ...]

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "projrep/catalog.hpp"
#include "projrep/kernels.hpp"
#include "projrep/twisted_algebra.hpp"
#include "projrep/verifier.hpp"

using namespace projrep;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    f();
    const double t = omp_get_wtime() - t0;
    if (t < best) best = t;
  }
  return best;
}

void row(const char* kernel, const std::string& group, double serial, double parallel, bool same) {
  std::printf("%-20s %-12s %12.6f %12.6f %8.2f  %s\n", kernel, group.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::vector<std::string> names;
  for (int i = 2; i < argc; ++i) names.emplace_back(argv[i]);
  if (names.empty()) names = {"D12", "S4", "D4xS3", "A5", "SL(2,5)", "S4xS3"};

  std::printf("threads: %d, repetitions: %d\n", kernel_threads(), reps);
  std::printf("%-20s %-12s %12s %12s %8s\n", "kernel", "group", "serial [s]", "parallel [s]", "speedup");
  bool ok = true;
  for (const auto& name : names) {
    GroupPtr g;
    try {
      g = catalog_group(name);
    } catch (const std::exception& e) {
      std::printf("skipping %s: %s\n", name.c_str(), e.what());
      continue;
    }
    const MultiplierPtr m = multiplier_for(g);
    const Coclass c(m, m->exponents_at(m->size() - 1));
    const UnitCocycle alpha = to_unit(c.representative());
    const FiniteGroup& G = *g;

    double ds = 0, dp = 0;
    const double t_ds = best_of(reps, [&] { ds = cocycle_defect(G, alpha, Exec::Serial); });
    const double t_dp = best_of(reps, [&] { dp = cocycle_defect(G, alpha, Exec::Parallel); });
    row("cocycle_defect", name, t_ds, t_dp, ds == dp);
    ok = ok && ds == dp;

    std::vector<Eigen::VectorXcd> cs, cp;
    const double t_cs = best_of(reps, [&] { cs = twisted_class_sums(G, alpha, Exec::Serial); });
    const double t_cp = best_of(reps, [&] { cp = twisted_class_sums(G, alpha, Exec::Parallel); });
    bool same = cs.size() == cp.size();
    for (std::size_t i = 0; same && i < cs.size(); ++i) same = cs[i] == cp[i];
    row("twisted_class_sums", name, t_cs, t_cp, same);
    ok = ok && same;

    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    Eigen::VectorXcd a(G.order());
    for (int i = 0; i < G.order(); ++i) a[i] = cd(nd(rng), nd(rng));
    Eigen::MatrixXcd ls, lp, rs, rp;
    const double t_ls = best_of(reps, [&] { ls = left_action(G, alpha, a, Exec::Serial); });
    const double t_lp = best_of(reps, [&] { lp = left_action(G, alpha, a, Exec::Parallel); });
    row("left_action", name, t_ls, t_lp, ls == lp);
    const double t_rs = best_of(reps, [&] { rs = right_action(G, alpha, a, Exec::Serial); });
    const double t_rp = best_of(reps, [&] { rp = right_action(G, alpha, a, Exec::Parallel); });
    row("right_action", name, t_rs, t_rp, rs == rp);
    ok = ok && ls == lp && rs == rp;
  }
  return ok ? 0 : 1;
}
