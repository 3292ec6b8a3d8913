#include "valmat/matroid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "valmat/caps.hpp"
#include "valmat/errors.hpp"

namespace valmat {

BaseFamily::BaseFamily(GroundSet ground, int rank, std::vector<Subset> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {
  if (rank_ < 0) throw domain_error("rank must be nonnegative");
  if (bases_.empty()) throw domain_error("base family must be nonempty");
  for (Subset b : bases_) {
    if (!subset_of(b, ground_.full()))
      throw domain_error("base outside the ground set");
    if (subset_size(b) != rank_)
      throw domain_error("base of size " + std::to_string(subset_size(b)) +
                         " in a rank-" + std::to_string(rank_) + " family");
  }
  std::sort(bases_.begin(), bases_.end(), lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool BaseFamily::contains(Subset base) const {
  return std::binary_search(bases_.begin(), bases_.end(), base, lex_less);
}

int BaseFamily::index_of(Subset base) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), base, lex_less);
  if (it == bases_.end() || *it != base) return -1;
  return static_cast<int>(it - bases_.begin());
}

bool BaseFamily::is_independent(Subset s) const {
  for (Subset b : bases_)
    if (subset_of(s, b)) return true;
  return false;
}

int BaseFamily::rank_of(Subset s) const {
  // Greedy augmentation against the independence oracle. Matroid augmentation
  // makes every maximal independent subset of s have size rank_of(s), so the
  // scan order does not matter.
  Subset indep = kEmptySubset;
  for (int i = 0; i < ground_.size(); ++i) {
    if (!has(s, i)) continue;
    if (is_independent(indep | bit(i))) indep |= bit(i);
  }
  return subset_size(indep);
}

Subset BaseFamily::closure(Subset s) const {
  int r = rank_of(s);
  Subset cl = kEmptySubset;
  for (int i = 0; i < ground_.size(); ++i) {
    if (has(s, i) || rank_of(s | bit(i)) == r) cl |= bit(i);
  }
  return cl;
}

Subset BaseFamily::loops() const {
  Subset covered = kEmptySubset;
  for (Subset b : bases_) covered |= b;
  return ground_.full() & ~covered;
}

std::vector<Subset> BaseFamily::parallel_classes() const {
  // Two non-loops are parallel iff no base contains both. The relation is an
  // equivalence on non-loops, so one pass of grouping suffices.
  Subset nonloops = ground_.full() & ~loops();
  std::vector<Subset> classes;
  Subset assigned = kEmptySubset;
  for (int i = 0; i < ground_.size(); ++i) {
    if (!has(nonloops, i) || has(assigned, i)) continue;
    Subset cls = bit(i);
    for (int j = i + 1; j < ground_.size(); ++j) {
      if (!has(nonloops, j) || has(assigned, j)) continue;
      bool together = false;
      for (Subset b : bases_) {
        if (has(b, i) && has(b, j)) {
          together = true;
          break;
        }
      }
      if (!together) cls |= bit(j);
    }
    assigned |= cls;
    classes.push_back(cls);
  }
  return classes;
}

std::vector<Subset> BaseFamily::flats() const {
  if (static_cast<std::size_t>(ground_.size()) > caps().flats_ground)
    throw domain_error("flat enumeration capped at " +
                       std::to_string(caps().flats_ground) +
                       " elements (override with VALMAT_CAPS)");
  // Closure-driven search: every flat above F containing e lies above
  // closure(F + e), so expanding each flat by single elements reaches all.
  std::set<Subset> seen;
  std::vector<Subset> queue{closure(kEmptySubset)};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Subset f = queue[head];
    for (int i = 0; i < ground_.size(); ++i) {
      if (has(f, i)) continue;
      Subset g = closure(f | bit(i));
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](Subset a, Subset b) {
    int ra = rank_of(a), rb = rank_of(b);
    if (ra != rb) return ra < rb;
    return lex_less(a, b);
  });
  return out;
}

std::vector<Subset> BaseFamily::hyperplanes() const {
  std::vector<Subset> out;
  for (Subset f : flats())
    if (rank_of(f) == rank_ - 1) out.push_back(f);
  return out;
}

bool BaseFamily::is_simple() const {
  if (loops() != kEmptySubset) return false;
  for (Subset cls : parallel_classes())
    if (subset_size(cls) > 1) return false;
  return true;
}

std::optional<ExchangeFailure> find_exchange_failure(const BaseFamily& f) {
  for (Subset b : f.bases()) {
    for (Subset bp : f.bases()) {
      Subset leave = b & ~bp;
      Subset enter = bp & ~b;
      for (int e : subset_indices(leave)) {
        bool ok = false;
        for (int g : subset_indices(enter)) {
          if (f.contains((b & ~bit(e)) | bit(g))) {
            ok = true;
            break;
          }
        }
        if (!ok) return ExchangeFailure{b, bp, e};
      }
    }
  }
  return std::nullopt;
}

bool is_base_family(const BaseFamily& f) { return !find_exchange_failure(f).has_value(); }

}  // namespace valmat
