// Shared vector helpers and the feasible action type: nonnegative entries,
// Euclidean norm at most 1.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eccm {

using Vec = std::vector<double>;

inline constexpr double kFeasibilityTol = 1e-12;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);
bool all_finite(const Vec& v);

class ActionVector {
 public:
  ActionVector() = default;

  // Checks the feasibility invariants; throws std::invalid_argument.
  static ActionVector validated(Vec entries);

  const Vec& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  bool operator==(const ActionVector&) const = default;

 private:
  explicit ActionVector(Vec entries) : entries_(std::move(entries)) {}
  Vec entries_;

  friend ActionVector project_feasible(const Vec&);
};

// Euclidean projection onto {v >= 0, ||v||_2 <= 1}: clip negatives, then
// rescale by 1/max(1, norm). Exactly idempotent.
ActionVector project_feasible(const Vec& x);

}  // namespace eccm
