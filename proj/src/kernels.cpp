#include "eh/kernels.hpp"

#include <algorithm>

#ifdef EH_HAVE_OPENMP
#include <omp.h>
#endif

namespace eh {
namespace {

struct CellJob {
  const ActionCase* kase;
  Family family;
};

std::vector<CellJob> all_jobs() {
  std::vector<CellJob> jobs;
  for (const auto& c : action_cases())
    for (Family f : case_families(c.type)) jobs.push_back({&c, f});
  return jobs;
}

long long base_order(Family f, long n) {
  long long nn = static_cast<long long>(n) * n;
  switch (f) {
    case Family::A: return 8 * nn;
    case Family::B: return 4 * nn;
    case Family::C: return 12 * nn;
    case Family::D: return 4 * nn;
    case Family::E: return 6 * nn;
    case Family::F: return 2 * nn;
  }
  return 0;
}

long divisor_of(Family f) {
  if (f == Family::B) return 2;
  if (f == Family::D || f == Family::F) return 3;
  return 1;
}

void scan_job(const CellJob& job, long gmax,
              std::vector<std::vector<CatalogedAction>>& buckets) {
  Rational area = signature_of(*job.kase).area();
  bool full = case_is_full(*job.kase);
  long div = divisor_of(job.family);
  for (long n = div;; n += div) {
    Rational gm1 = Rational(base_order(job.family, n)) * area / Rational(2);
    if (gm1 > Rational(gmax - 1)) break;
    if (!gm1.is_integer()) continue;
    long g = static_cast<long>(gm1.as_integer()) + 1;
    if (g < 6) continue;
    for (const auto& v : computed_variants(*job.kase, job.family, n))
      buckets[g - 6].push_back({job.kase->label, job.family, v, n, full});
  }
}

}  // namespace

const std::vector<CatalogedAction>& SweepResult::at(long g) const {
  if (g < gmin || g > gmax)
    fail(errc::bad_parameter, "genus " + std::to_string(g) + " outside sweep range");
  return buckets[g - gmin];
}

SweepResult sweep_actions_serial(long gmax) {
  if (gmax <= 5) fail(errc::bad_parameter, "sweep needs gmax > 5");
  SweepResult r;
  r.gmax = gmax;
  r.buckets.assign(gmax - 5, {});
  for (const auto& job : all_jobs()) scan_job(job, gmax, r.buckets);
  for (auto& b : r.buckets) std::sort(b.begin(), b.end(), action_less);
  return r;
}

SweepResult sweep_actions_parallel(long gmax) {
  if (gmax <= 5) fail(errc::bad_parameter, "sweep needs gmax > 5");
  SweepResult r;
  r.gmax = gmax;
  r.buckets.assign(gmax - 5, {});
#ifdef EH_HAVE_OPENMP
  auto jobs = all_jobs();
#pragma omp parallel
  {
    std::vector<std::vector<CatalogedAction>> local(r.buckets.size());
#pragma omp for schedule(dynamic) nowait
    for (long long i = 0; i < static_cast<long long>(jobs.size()); ++i)
      scan_job(jobs[i], gmax, local);
#pragma omp critical
    for (size_t b = 0; b < local.size(); ++b)
      r.buckets[b].insert(r.buckets[b].end(), local[b].begin(), local[b].end());
  }
#else
  for (const auto& job : all_jobs()) scan_job(job, gmax, r.buckets);
#endif
  for (auto& b : r.buckets) std::sort(b.begin(), b.end(), action_less);
  return r;
}

bool sweep_equal(const SweepResult& x, const SweepResult& y) {
  return x.gmin == y.gmin && x.gmax == y.gmax && x.buckets == y.buckets;
}

}  // namespace eh
