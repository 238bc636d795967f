#ifndef VAB_VIOLATION_HPP
#define VAB_VIOLATION_HPP

#include <string>
#include <vector>

namespace vab {

/// One failed axiom instance: which axiom, at which basis indices, and
/// the nonzero residual it left behind.
struct Violation {
  std::string axiom;
  std::vector<long> indices;
  std::string residual;
};

struct ViolationReport {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(std::string axiom, std::vector<long> indices, std::string residual);
  void merge(const ViolationReport& other);
  /// Canonical order: (axiom id, index tuple).
  void sort();
  /// Sorted list of distinct axiom ids present.
  std::vector<std::string> axioms() const;
  bool has_axiom(const std::string& id) const;
  std::string str() const;
};

}  // namespace vab

#endif
