// Times the serial reference kernels against the OpenMP-parallel ones on the
// heaviest workload in the tree (the (0,6) tensors of the 7-dimensional
// product frame) and verifies that the results are identical.

#include <chrono>
#include <iostream>

#include "curvwb/conditions.hpp"
#include "curvwb/fixtures.hpp"
#include "curvwb/nullity.hpp"
#include "curvwb/tensor_ops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace curvwb;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Timing {
  double serial_ms = 0, parallel_ms = 0;
};

template <class F, class G>
Timing time_pair(F&& serial, G&& parallel, const char* label) {
  Timing t;
  auto t0 = Clock::now();
  const Tensor a = serial();
  t.serial_ms = ms_since(t0);
  t0 = Clock::now();
  const Tensor b = parallel();
  t.parallel_ms = ms_since(t0);
  if (!(a == b)) {
    std::cerr << label << ": serial and parallel results differ\n";
    std::exit(1);
  }
  std::cout << label << ": serial " << t.serial_ms << " ms, parallel " << t.parallel_ms
            << " ms, speedup " << (t.serial_ms / t.parallel_ms) << "x\n";
  return t;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel path runs serially\n";
#endif
  const FrameSpec f = builtin_fixture("product-flat-sphere", {});
  const GeometryBundle b = make_geometry(f);
  const Tensor c = weyl(b, f.metric);
  const Tensor cl = lower_last(c, f.metric);

  time_pair([&] { return derivation_full_serial(b.R, cl); },
            [&] { return derivation_full_parallel(b.R, cl); }, "R . C        (0,6)");
  time_pair([&] { return q_full(f.metric, cl, ExecMode::Serial); },
            [&] { return q_full(f.metric, cl, ExecMode::Parallel); }, "Q(g, C)      (0,6)");
  const Tensor rr = b.R_low;
  time_pair([&] { return derivation_full_serial(b.R, rr); },
            [&] { return derivation_full_parallel(b.R, rr); }, "R . R        (0,6)");
  return 0;
}
