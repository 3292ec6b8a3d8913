#pragma once

#include <cstddef>

namespace valmat {

/// Enumeration caps. Everything in this library is exponential in the worst
/// case; the caps keep accidental large inputs from hanging the process.
/// Overridable through the VALMAT_CAPS environment variable, a comma list of
/// name=value pairs, e.g. VALMAT_CAPS="flats=24,interval=200000".
struct Caps {
  std::size_t flats_ground = 20;    // |E| limit for flat enumeration   (flats)
  std::size_t exhaustive = 7;       // |E| limit for exhaustive checks  (exhaustive)
  std::size_t tw_ground = 20;       // |E| limit for the (TW) test      (tw-ground)
  std::size_t tw_rank = 6;          // rank limit for the (TW) test     (tw-rank)
  std::size_t interval_points = 100000;  // box size limit for intervals (interval)
  std::size_t dot_points = 500;     // interval size limit for DOT export (dot)
};

/// Process-wide caps, parsed from VALMAT_CAPS once on first use.
const Caps& caps();

/// Parses a VALMAT_CAPS-style override string onto defaults. Unknown names or
/// malformed entries raise parse_error.
Caps parse_caps(const char* text);

}  // namespace valmat
