#ifndef NIJLIE_REPORT_HPP
#define NIJLIE_REPORT_HPP

#include <string>
#include <vector>

#include "nijlie/rational.hpp"

namespace nijlie {

/// One violated axiom instance: which identity, on which basis tuple,
/// and the exact nonzero residual.
struct Witness {
  std::string label;
  std::vector<int> indices;
  Vec residual;
};

/// Structured result of a checker.  Empty witness list means the axioms hold.
struct CheckReport {
  std::vector<Witness> witnesses;

  bool ok() const { return witnesses.empty(); }

  void add_nonzero(const std::string& label, std::vector<int> indices, Vec residual) {
    if (is_zero(residual)) return;
    witnesses.push_back({label, std::move(indices), std::move(residual)});
  }

  void merge(const CheckReport& other, const std::string& prefix = "") {
    for (const auto& w : other.witnesses)
      witnesses.push_back({prefix.empty() ? w.label : prefix + ":" + w.label, w.indices, w.residual});
  }
};

}  // namespace nijlie

#endif
