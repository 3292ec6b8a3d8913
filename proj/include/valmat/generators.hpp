#pragma once

#include <string>
#include <vector>

#include "valmat/poly.hpp"
#include "valmat/valuation.hpp"

namespace valmat {

/// Tree with unit-length edges, a distinguished leaf set, and a root. The
/// vertices named in `leaves` become the ground set of the generated
/// valuation.
struct TreeInstance {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex indices
  std::vector<int> leaves;                 // at least two, distinct
  int root = 0;
};

/// Rank-2 valuation on all leaf pairs with value -2 * d(root, meet(u, v)),
/// the meet being where the root paths to u and v diverge. Equivalent to the
/// tree metric itself up to a projective shift.
Valuation gen_tree_metric(const TreeInstance& t);

/// Path distance matrix of a tree (number of edges).
std::vector<std::vector<int>> tree_distances(const TreeInstance& t);

/// Matrix of integer polynomials; columns are labelled ground elements.
struct PolyMatrix {
  int rows = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<IntPoly>> columns;  // columns[j][i] = entry (i, j)
};

/// Bases are the column subsets with nonzero determinant, valued by the
/// determinant degree (fraction-free elimination).
Valuation gen_representable(const PolyMatrix& m);

/// The zero valuation on the uniform matroid of the given rank.
Valuation gen_uniform_zero(const std::vector<std::string>& labels, int rank);

/// Translation of v by a seeded random vector with entries in [-3, 3].
Valuation gen_perturbed(const Valuation& v, unsigned seed);

}  // namespace valmat
