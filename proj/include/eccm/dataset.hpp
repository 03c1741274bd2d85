// Append-only record of (probe, response) pairs; the radar's evidence.
#pragma once

#include "eccm/action.hpp"

namespace eccm {

struct InteractionRecord {
  ActionVector probe;
  ActionVector response;
};

class InteractionDataset {
 public:
  void append(ActionVector probe, ActionVector response) {
    if (probe.dim() != response.dim())
      throw std::invalid_argument("InteractionDataset: probe/response dimension mismatch");
    if (!records_.empty() && probe.dim() != records_.front().probe.dim())
      throw std::invalid_argument("InteractionDataset: record dimension mismatch");
    records_.push_back({std::move(probe), std::move(response)});
  }

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::size_t dim() const { return records_.empty() ? 0 : records_.front().probe.dim(); }

  // Arrival order; engagement step k is records()[k-1].
  const std::vector<InteractionRecord>& records() const { return records_; }

 private:
  std::vector<InteractionRecord> records_;
};

}  // namespace eccm
