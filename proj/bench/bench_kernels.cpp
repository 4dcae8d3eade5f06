// Times the serial reference kernels against their OpenMP counterparts and
// cross-checks that both variants return the same result. Not a test target;
// run it by hand after a build: ./build/bench/bench_kernels
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "idiomlab/error.hpp"
#include "idiomlab/kernels.hpp"
#include "idiomlab/lattice.hpp"

using namespace idiomlab;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up caches and the OpenMP thread pool
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool same(const std::optional<Triple>& x, const std::optional<Triple>& y) {
  if (x.has_value() != y.has_value()) return false;
  return !x || (x->a == y->a && x->b == y->b && x->c == y->c);
}

int rows_emitted = 0;
int mismatches = 0;

void row(const char* kernel, const std::string& host, double serial_ms,
         double parallel_ms, bool agree) {
  std::printf("%-20s %-26s %10.3f %12.3f %7.2fx   %s\n", kernel, host.c_str(),
              serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              agree ? "yes" : "NO");
  ++rows_emitted;
  if (!agree) ++mismatches;
}

void bench_scans(const FiniteLattice& L, int reps) {
  auto ms = time_ms([&] { kernels::modular_violation_serial(L); }, reps);
  auto mp = time_ms([&] { kernels::modular_violation_parallel(L); }, reps);
  bool ok = same(kernels::modular_violation_serial(L),
                 kernels::modular_violation_parallel(L));
  row("modular-violation", L.name(), ms, mp, ok);

  auto ds = time_ms([&] { kernels::distributive_violation_serial(L); }, reps);
  auto dp = time_ms([&] { kernels::distributive_violation_parallel(L); }, reps);
  ok = same(kernels::distributive_violation_serial(L),
            kernels::distributive_violation_parallel(L));
  row("distributive-viol.", L.name(), ds, dp, ok);
}

void bench_maps(const FiniteLattice& L, long long bound, int enum_reps,
                int flag_reps, int order_reps, int screen_reps) {
  std::vector<std::vector<Elem>> tables;
  try {
    tables = kernels::inflationary_maps_serial(L, bound);
  } catch (const Error& e) {
    std::printf("%-20s %-26s skipped: %s\n", "enumeration", L.name().c_str(),
                e.what());
    return;
  }

  auto es = time_ms([&] { kernels::inflationary_maps_serial(L, bound); },
                    enum_reps);
  auto ep = time_ms([&] { kernels::inflationary_maps_parallel(L, bound); },
                    enum_reps);
  row("enumeration", L.name(), es, ep,
      tables == kernels::inflationary_maps_parallel(L, bound));

  auto fs = time_ms([&] { kernels::map_flags_serial(L, tables); }, flag_reps);
  auto fp =
      time_ms([&] { kernels::map_flags_parallel(L, tables); }, flag_reps);
  auto flags_a = kernels::map_flags_serial(L, tables);
  auto flags_b = kernels::map_flags_parallel(L, tables);
  bool fok = flags_a.size() == flags_b.size();
  for (size_t i = 0; fok && i < flags_a.size(); ++i) {
    fok = flags_a[i].stable == flags_b[i].stable &&
          flags_a[i].prenucleus == flags_b[i].prenucleus &&
          flags_a[i].idempotent == flags_b[i].idempotent;
  }
  row("map-flags", L.name(), fs, fp, fok);

  auto os = time_ms([&] { kernels::pointwise_order_serial(L, tables); },
                    order_reps);
  auto op = time_ms([&] { kernels::pointwise_order_parallel(L, tables); },
                    order_reps);
  row("pointwise-order", L.name(), os, op,
      kernels::pointwise_order_serial(L, tables) ==
          kernels::pointwise_order_parallel(L, tables));

  const auto& d = tables[tables.size() / 2];
  auto ss = time_ms(
      [&] {
        kernels::screened_extremum_serial(L, tables, d, false,
                                          kernels::Reduce::join);
      },
      screen_reps);
  auto sp = time_ms(
      [&] {
        kernels::screened_extremum_parallel(L, tables, d, false,
                                            kernels::Reduce::join);
      },
      screen_reps);
  row("screened-extremum", L.name(), ss, sp,
      kernels::screened_extremum_serial(L, tables, d, false,
                                        kernels::Reduce::join) ==
          kernels::screened_extremum_parallel(L, tables, d, false,
                                              kernels::Reduce::join));
}

}  // namespace

int main() {
  std::printf("kernel benchmark, %d workers\n\n", kernels::worker_count());
  std::printf("%-20s %-26s %10s %12s %9s   %s\n", "kernel", "host",
              "serial ms", "parallel ms", "speedup", "agree");

  // Law scans want many elements; the 64-element grid is the size cap.
  bench_scans(generate_family("product(chain(8),chain(8))"), 20);

  // Map kernels want many members: boolean(3) carries 216 inflators and the
  // 9-chain 4862, enough for the quadratic order matrix to show a spread.
  bench_maps(make_boolean(3), 100000, 20, 20, 5, 100);
  bench_maps(make_chain(9), 100000, 3, 3, 1, 10);

  std::printf("\n%d rows, %d disagreements\n", rows_emitted, mismatches);
  return mismatches == 0 ? 0 : 1;
}
