#include "eccm/action.hpp"

#include <algorithm>
#include <cmath>

namespace eccm {

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

bool all_finite(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

ActionVector ActionVector::validated(Vec entries) {
  if (!all_finite(entries)) throw std::invalid_argument("ActionVector: non-finite entry");
  for (double x : entries)
    if (x < 0.0) throw std::invalid_argument("ActionVector: negative entry");
  if (norm2(entries) > 1.0 + kFeasibilityTol)
    throw std::invalid_argument("ActionVector: norm exceeds 1");
  return ActionVector(std::move(entries));
}

ActionVector project_feasible(const Vec& x) {
  if (!all_finite(x)) throw std::invalid_argument("project_feasible: non-finite entry");
  Vec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = std::max(0.0, x[i]);
  // Re-normalize until the computed norm is <= 1 so that projecting an
  // already-projected vector is a bit-exact no-op.
  for (int pass = 0; pass < 8; ++pass) {
    const double n = norm2(v);
    if (n <= 1.0) break;
    for (double& e : v) e /= n;
  }
  return ActionVector(std::move(v));
}

}  // namespace eccm
