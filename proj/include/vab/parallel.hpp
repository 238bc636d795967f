#ifndef VAB_PARALLEL_HPP
#define VAB_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace vab {

/// Execution mode for the data-parallel kernels (axiom sweeps, bracket
/// tables, action matrices). The serial path is an independent plain loop
/// kept as the reference implementation; tests assert both paths produce
/// identical results and the benchmark target compares their timings.
enum class Exec { Serial, Parallel };

Exec execution_mode();
void set_execution_mode(Exec mode);

/// Runs fn(i) for i in [0, n). Iterations must be independent; each
/// iteration may only write state it owns. Results are deterministic in
/// both modes because no iteration order is observable.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Like parallel_for but with an explicit mode, for the serial/OpenMP
/// comparison tests and the benchmark.
void for_each_index(Exec mode, std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace vab

#endif
