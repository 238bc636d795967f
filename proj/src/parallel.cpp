#include "vab/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vab {

namespace {
std::atomic<Exec> g_mode{Exec::Parallel};
}

Exec execution_mode() { return g_mode.load(); }
void set_execution_mode(Exec mode) { g_mode.store(mode); }

void for_each_index(Exec mode, std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (mode == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  // GMP values are independent heap objects; iterations only touch slots
  // they own, so the loop is safe without locks.
  #pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  for_each_index(g_mode.load(), n, fn);
}

}  // namespace vab
