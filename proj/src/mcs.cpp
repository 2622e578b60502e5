#include "urllc/mcs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace urllc {

namespace {

// TS 38.214 Table 5.1.3.1-3 (low spectral efficiency), indices 8..24:
// {index, modulation order Qm, code rate x1024}.
constexpr struct {
  int index;
  int qm;
  double rate_x1024;
} kNrLowSe[] = {
    {8, 2, 193},  {9, 2, 251},  {10, 2, 308}, {11, 2, 379}, {12, 2, 449},
    {13, 2, 526}, {14, 2, 602}, {15, 4, 340}, {16, 4, 378}, {17, 4, 434},
    {18, 4, 490}, {19, 4, 553}, {20, 4, 616}, {21, 6, 438}, {22, 6, 466},
    {23, 6, 517}, {24, 6, 567},
};

}  // namespace

McsTable::McsTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("McsTable: empty table");
  for (size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].index != entries_[i - 1].index + 1)
      throw std::invalid_argument("McsTable: indices not contiguous");
    if (!(entries_[i].rate > entries_[i - 1].rate))
      throw std::invalid_argument("McsTable: rates not strictly increasing");
  }
}

const McsTable& McsTable::nr_low_se() {
  static const McsTable table = [] {
    std::vector<Entry> rows;
    for (const auto& e : kNrLowSe) rows.push_back({e.index, e.qm * e.rate_x1024 / 1024.0});
    return McsTable(rows);
  }();
  return table;
}

McsTable McsTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("McsTable: cannot open " + path);
  std::vector<Entry> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
    std::istringstream ss(line);
    std::string field;
    std::getline(ss, field, ',');
    int index = std::stoi(field);
    std::getline(ss, field, ',');
    int qm = std::stoi(field);
    std::getline(ss, field, ',');
    double rx1024 = std::stod(field);
    rows.push_back({index, qm * rx1024 / 1024.0});
  }
  return McsTable(rows);
}

double McsTable::rate_of(int index) const {
  if (index < index_min() || index > index_max())
    throw std::out_of_range("McsTable: index out of range");
  return entries_[index - index_min()].rate;
}

McsTable::Entry McsTable::nearest(double rate) const {
  if (rate <= rate_min()) return entries_.front();
  if (rate >= rate_max()) return entries_.back();
  Entry best = entries_.front();
  double best_dist = std::abs(rate - best.rate);
  for (const Entry& e : entries_) {
    double dist = std::abs(rate - e.rate);
    if (dist < best_dist) {  // strict: ties keep the lower index
      best = e;
      best_dist = dist;
    }
  }
  return best;
}

McsTable::Entry McsTable::floor(double rate) const {
  Entry best = entries_.front();
  for (const Entry& e : entries_) {
    if (e.rate <= rate) best = e;
  }
  return best;
}

}  // namespace urllc
