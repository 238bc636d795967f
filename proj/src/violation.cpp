#include "vab/violation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vab {

void ViolationReport::add(std::string axiom, std::vector<long> indices, std::string residual) {
  items.push_back({std::move(axiom), std::move(indices), std::move(residual)});
}

void ViolationReport::merge(const ViolationReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

void ViolationReport::sort() {
  std::sort(items.begin(), items.end(), [](const Violation& a, const Violation& b) {
    if (a.axiom != b.axiom) return a.axiom < b.axiom;
    return a.indices < b.indices;
  });
}

std::vector<std::string> ViolationReport::axioms() const {
  std::set<std::string> s;
  for (const auto& v : items) s.insert(v.axiom);
  return {s.begin(), s.end()};
}

bool ViolationReport::has_axiom(const std::string& id) const {
  for (const auto& v : items)
    if (v.axiom == id) return true;
  return false;
}

std::string ViolationReport::str() const {
  std::ostringstream os;
  for (const auto& v : items) {
    os << v.axiom << " @(";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << ") residual " << v.residual << "\n";
  }
  return os.str();
}

}  // namespace vab
