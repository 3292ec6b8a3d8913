#include "valmat/ground.hpp"

#include <algorithm>

#include "valmat/errors.hpp"

namespace valmat {

bool lex_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw domain_error("ground set must be nonempty");
  if (labels_.size() > 64) throw domain_error("ground set exceeds 64 elements");
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) throw domain_error("ground set labels must be nonempty");
    if (!index_.emplace(labels_[i], i).second)
      throw domain_error("duplicate ground set label \"" + labels_[i] + "\"");
  }
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw parse_error("unknown element label \"" + label + "\"");
  return it->second;
}

bool GroundSet::contains(const std::string& label) const {
  return index_.find(label) != index_.end();
}

std::vector<std::string> GroundSet::subset_labels(Subset s) const {
  std::vector<std::string> out;
  for (int i : subset_indices(s)) out.push_back(labels_[i]);
  return out;
}

Point zero_point(const GroundSet& g) { return Point(g.size(), 0); }

Point add_indicator(Point p, Subset s, long long step) {
  for (int i : subset_indices(s)) p[i] += step;
  return p;
}

Point point_min(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Point point_max(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool point_leq(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace valmat
