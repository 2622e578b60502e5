#pragma once

#include <string>
#include <utility>
#include <vector>

#include "urllc/types.hpp"

namespace urllc {

// Discrete MCS grid: contiguous indices with strictly increasing spectral
// efficiency (bits/symbol). The bundled table covers NR indices 8..24.
class McsTable {
 public:
  struct Entry {
    int index;
    double rate;  // bits/symbol
  };

  McsTable() = default;
  explicit McsTable(std::vector<Entry> entries);

  // The 3GPP TS 38.214 Table 5.1.3.1-3 entries for indices 8..24,
  // rate = Qm * (R/1024).
  static const McsTable& nr_low_se();

  // Loads "index,modulation_order,code_rate_x1024" CSV rows (header allowed).
  static McsTable load_csv(const std::string& path);

  int index_min() const { return entries_.front().index; }
  int index_max() const { return entries_.back().index; }
  double rate_min() const { return entries_.front().rate; }
  double rate_max() const { return entries_.back().rate; }
  const std::vector<Entry>& entries() const { return entries_; }
  double rate_of(int index) const;

  // Nearest-rate entry, ties broken toward the lower index; clamps outside
  // the grid.
  Entry nearest(double rate) const;

  // Largest entry whose rate does not exceed `rate`; clamps to the lowest
  // index when even that rate is above `rate`.
  Entry floor(double rate) const;

 private:
  std::vector<Entry> entries_;
};

inline McsTable::Entry discretize_rate(double rate, const McsTable& table) {
  return table.nearest(rate);
}

}  // namespace urllc
