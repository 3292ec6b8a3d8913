#pragma once

#include <optional>
#include <string>

#include "valmat/generators.hpp"
#include "valmat/lattice.hpp"

namespace valmat {

inline constexpr const char* kInstanceFormat = "valmat/1";

/// Parses an instance document (see README for the schema). Structural
/// problems -- duplicate bases, wrong base sizes, unknown labels, non-integer
/// values -- are parse errors naming the offending entry. The base-exchange
/// axiom is not checked here; loading through the CLI does that.
Valuation parse_instance(const std::string& text);

/// Canonical emission: fixed key order, elements in declared order, bases
/// sorted lexicographically with elements listed in ground order. Parsing the
/// result reproduces the valuation exactly. An optional provenance block is
/// carried through verbatim.
std::string emit_instance(const Valuation& v,
                          const std::optional<std::string>& provenance_json = {});

/// Points as comma-separated label=value pairs ("e1=1,e3=-2"); omitted labels
/// default to zero. Rational values accept "p/q".
Point parse_point(const GroundSet& g, const std::string& text);
RationalPoint parse_rational_point(const GroundSet& g, const std::string& text);

/// Subset as comma-separated labels ("e1,e3").
Subset parse_subset(const GroundSet& g, const std::string& text);

/// Tree and polynomial-matrix documents for the generators (schemas in the
/// README).
TreeInstance parse_tree(const std::string& text);
PolyMatrix parse_poly_matrix(const std::string& text);

/// DOT digraph of the cover relation on the interval [x, y], capped in size.
/// When y = x + 1, nodes also carry the corresponding flat of the matroid
/// at x.
std::string export_dot(const Valuation& v, const LatticePoint& x,
                       const LatticePoint& y);

}  // namespace valmat
