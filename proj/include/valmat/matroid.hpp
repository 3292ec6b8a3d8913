#pragma once

#include <optional>
#include <vector>

#include "valmat/ground.hpp"

namespace valmat {

/// A failed base exchange: for bases b, bprime and drop in b \ bprime, no
/// element of bprime \ b restores a base.
struct ExchangeFailure {
  Subset b;
  Subset bprime;
  int drop;
};

/// Finite matroid given by its explicit base family. Bases are stored in
/// lexicographic order; all derived operators (rank, closure, flats, parallel
/// classes) are computed through the independence oracle "contained in some
/// base".
class BaseFamily {
 public:
  BaseFamily(GroundSet ground, int rank, std::vector<Subset> bases);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }
  int base_count() const { return static_cast<int>(bases_.size()); }

  bool contains(Subset base) const;
  /// Index into bases() of a base, or -1.
  int index_of(Subset base) const;

  bool is_independent(Subset s) const;
  int rank_of(Subset s) const;
  Subset closure(Subset s) const;
  Subset loops() const;
  std::vector<Subset> parallel_classes() const;
  /// All flats ordered by (rank, lex). Enumerated by closure-driven search,
  /// never a 2^E scan; capped at caps().flats_ground elements.
  std::vector<Subset> flats() const;
  /// Flats of rank rank()-1.
  std::vector<Subset> hyperplanes() const;

  bool is_simple() const;

  bool operator==(const BaseFamily& other) const {
    return ground_ == other.ground_ && rank_ == other.rank_ && bases_ == other.bases_;
  }

 private:
  GroundSet ground_;
  int rank_;
  std::vector<Subset> bases_;
};

/// First violated exchange, if any. Empty result means the family satisfies
/// the matroid base axiom.
std::optional<ExchangeFailure> find_exchange_failure(const BaseFamily& f);

bool is_base_family(const BaseFamily& f);

}  // namespace valmat
