#ifndef VAB_SRC_SWEEP_HPP
#define VAB_SRC_SWEEP_HPP

// Internal helper for the axiom sweeps: evaluates a residual over an
// index-tuple family with the configured execution mode and collects the
// nonzero instances deterministically.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vab/parallel.hpp"
#include "vab/rational.hpp"
#include "vab/violation.hpp"

namespace vab::detail {

using IndexTuple = std::vector<long>;

inline std::vector<IndexTuple> index_tuples(std::vector<std::size_t> dims) {
  std::vector<IndexTuple> out;
  IndexTuple cur(dims.size(), 0);
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  if (total == 0) return out;
  out.reserve(total);
  for (;;) {
    out.push_back(cur);
    std::size_t k = dims.size();
    while (k > 0) {
      --k;
      if (++cur[k] < (long)dims[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (dims.empty()) return out;
  }
}

inline std::string vec_str(const VecQ& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
  os << "]";
  return os.str();
}

inline void run_vec_family(ViolationReport& rep, const std::string& axiom,
                           const std::vector<IndexTuple>& tuples,
                           const std::function<VecQ(const IndexTuple&)>& residual) {
  std::vector<std::string> text(tuples.size());
  std::vector<char> bad(tuples.size(), 0);
  parallel_for(tuples.size(), [&](std::size_t t) {
    VecQ r = residual(tuples[t]);
    if (!is_zero(r)) {
      bad[t] = 1;
      text[t] = vec_str(r);
    }
  });
  for (std::size_t t = 0; t < tuples.size(); ++t)
    if (bad[t]) rep.add(axiom, tuples[t], text[t]);
}

}  // namespace vab::detail

#endif
