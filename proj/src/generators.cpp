#include "valmat/generators.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "valmat/errors.hpp"

namespace valmat {

namespace {

void validate_tree(const TreeInstance& t) {
  const int n = static_cast<int>(t.vertices.size());
  if (n == 0) throw domain_error("tree has no vertices");
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw domain_error("tree must have exactly |V| - 1 edges");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : t.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw domain_error("tree edge out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n) throw domain_error("tree is not connected");
  if (t.leaves.size() < 2) throw domain_error("leaf set needs at least two vertices");
  std::set<int> distinct(t.leaves.begin(), t.leaves.end());
  if (distinct.size() != t.leaves.size()) throw domain_error("duplicate leaf");
  for (int l : t.leaves)
    if (l < 0 || l >= n) throw domain_error("leaf out of range");
  if (t.root < 0 || t.root >= n) throw domain_error("root out of range");
}

std::vector<int> bfs_distances(const TreeInstance& t, int src) {
  const int n = static_cast<int>(t.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  q.push(src);
  dist[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<int>> tree_distances(const TreeInstance& t) {
  validate_tree(t);
  std::vector<std::vector<int>> d;
  for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i)
    d.push_back(bfs_distances(t, i));
  return d;
}

Valuation gen_tree_metric(const TreeInstance& t) {
  validate_tree(t);
  auto d = tree_distances(t);
  std::vector<std::string> labels;
  for (int l : t.leaves) labels.push_back(t.vertices[l]);
  GroundSet ground(labels);

  std::vector<std::pair<Subset, long long>> entries;
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < t.leaves.size(); ++j) {
      int u = t.leaves[i], w = t.leaves[j];
      // Depth of the divergence point of the root paths to u and w:
      // (d(z,u) + d(z,w) - d(u,w)) / 2.
      long long depth = (d[t.root][u] + d[t.root][w] - d[u][w]) / 2;
      entries.emplace_back(bit(static_cast<int>(i)) | bit(static_cast<int>(j)),
                           -2 * depth);
    }
  }
  Valuation v = make_valuation(std::move(ground), 2, std::move(entries));
  if (check_exc(v))
    throw theorem_violation("tree valuation violates the exchange axiom");
  return v;
}

Valuation gen_representable(const PolyMatrix& m) {
  if (m.rows <= 0) throw domain_error("matrix needs at least one row");
  if (m.labels.size() != m.columns.size())
    throw domain_error("one label per column required");
  if (static_cast<int>(m.columns.size()) < m.rows)
    throw domain_error("matrix needs at least as many columns as rows");
  for (const auto& col : m.columns)
    if (static_cast<int>(col.size()) != m.rows)
      throw domain_error("column of wrong height");

  GroundSet ground(m.labels);
  const int cols = static_cast<int>(m.columns.size());
  std::vector<std::pair<Subset, long long>> entries;
  std::vector<int> pick(m.rows);
  for (int i = 0; i < m.rows; ++i) pick[i] = i;
  for (;;) {
    PolySquareMatrix square(m.rows, std::vector<IntPoly>(m.rows));
    for (int j = 0; j < m.rows; ++j)
      for (int i = 0; i < m.rows; ++i) square[i][j] = m.columns[pick[j]][i];
    IntPoly det = det_bareiss(square);
    if (!det.is_zero()) {
      Subset b = kEmptySubset;
      for (int j : pick) b |= bit(j);
      entries.emplace_back(b, det.degree());
    }
    int i = m.rows - 1;
    while (i >= 0 && pick[i] == cols - m.rows + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m.rows; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (entries.empty())
    throw domain_error("degenerate matrix: every maximal minor vanishes");
  Valuation v = make_valuation(std::move(ground), m.rows, std::move(entries));
  if (check_exc(v))
    throw theorem_violation("determinant degrees violate the exchange axiom");
  return v;
}

Valuation gen_uniform_zero(const std::vector<std::string>& labels, int rank) {
  if (rank < 0 || rank > static_cast<int>(labels.size()))
    throw domain_error("rank out of range for the uniform matroid");
  GroundSet ground(labels);
  std::vector<std::pair<Subset, long long>> entries;
  const int m = static_cast<int>(labels.size());
  std::vector<int> pick(rank);
  for (int i = 0; i < rank; ++i) pick[i] = i;
  for (;;) {
    Subset b = kEmptySubset;
    for (int i : pick) b |= bit(i);
    entries.emplace_back(b, 0);
    int i = rank - 1;
    while (i >= 0 && pick[i] == m - rank + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
  }
  return make_valuation(std::move(ground), rank, std::move(entries));
}

Valuation gen_perturbed(const Valuation& v, unsigned seed) {
  std::mt19937 rng(seed);
  Point x(v.ground().size());
  // Plain modulo keeps the draw identical across standard library
  // implementations.
  for (auto& c : x) c = static_cast<long long>(rng() % 7) - 3;
  return translate(v, x);
}

}  // namespace valmat
