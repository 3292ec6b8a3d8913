#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace valmat {

/// Subset of a ground set, as a bitmask over element indices. Ground sets are
/// capped at 64 elements, far above every enumeration cap in the library.
using Subset = std::uint64_t;

inline constexpr Subset kEmptySubset = 0;

inline Subset bit(int i) { return Subset{1} << i; }
inline bool has(Subset s, int i) { return (s >> i) & 1; }
inline int subset_size(Subset s) { return std::popcount(s); }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

/// Lexicographic order on subsets viewed as sorted index lists, e.g.
/// {0,3} < {1,2}. Used for all canonical orderings.
bool lex_less(Subset a, Subset b);

std::vector<int> subset_indices(Subset s);

/// Ordered finite ground set with distinct string labels. Iteration order is
/// the declared order everywhere.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; throws parse_error for unknown labels.
  int index(const std::string& label) const;
  bool contains(const std::string& label) const;

  Subset full() const { return (size() == 64) ? ~Subset{0} : bit(size()) - 1; }
  std::vector<std::string> subset_labels(Subset s) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Integer vector indexed by a ground set.
using Point = std::vector<long long>;

Point zero_point(const GroundSet& g);
Point add_indicator(Point p, Subset s, long long step = 1);
Point point_min(const Point& a, const Point& b);
Point point_max(const Point& a, const Point& b);
bool point_leq(const Point& a, const Point& b);

}  // namespace valmat
