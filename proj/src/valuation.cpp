#include "valmat/valuation.hpp"

#include <algorithm>
#include <string>

#include "valmat/errors.hpp"

namespace valmat {

namespace {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw domain_error("integer overflow in valuation arithmetic");
  return out;
}

std::string describe_base(const GroundSet& g, Subset b) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(b)) {
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

}  // namespace

Valuation::Valuation(BaseFamily family, std::vector<long long> values)
    : family_(std::move(family)), values_(std::move(values)) {
  if (values_.size() != family_.bases().size())
    throw domain_error("valuation needs exactly one value per base");
}

long long Valuation::value(Subset base) const {
  int i = family_.index_of(base);
  if (i < 0)
    throw domain_error("no value: " + describe_base(ground(), base) +
                       " is not a base of the family");
  return values_[i];
}

Valuation make_valuation(GroundSet ground, int rank,
                         std::vector<std::pair<Subset, long long>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::vector<Subset> bases;
  std::vector<long long> values;
  for (const auto& [b, val] : entries) {
    if (!bases.empty() && bases.back() == b)
      throw domain_error("duplicate base in valuation");
    bases.push_back(b);
    values.push_back(val);
  }
  return Valuation(BaseFamily(std::move(ground), rank, std::move(bases)),
                   std::move(values));
}

std::optional<ExcCounterexample> check_exc(const Valuation& v) {
  if (auto fail = find_exchange_failure(v.family())) {
    throw domain_error(
        "family is not a matroid: exchange fails for " +
        describe_base(v.ground(), fail->b) + ", " +
        describe_base(v.ground(), fail->bprime) + ", dropping " +
        v.ground().label(fail->drop));
  }
  const auto& bases = v.family().bases();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = 0; j < bases.size(); ++j) {
      Subset b = bases[i], bp = bases[j];
      long long lhs = checked_add(v.value_at(static_cast<int>(i)),
                                  v.value_at(static_cast<int>(j)));
      for (int e : subset_indices(b & ~bp)) {
        bool ok = false;
        for (int ep : subset_indices(bp & ~b)) {
          Subset b1 = (b & ~bit(e)) | bit(ep);
          Subset b2 = (bp & ~bit(ep)) | bit(e);
          if (!v.family().contains(b1) || !v.family().contains(b2)) continue;
          if (lhs <= checked_add(v.value(b1), v.value(b2))) {
            ok = true;
            break;
          }
        }
        if (!ok) return ExcCounterexample{b, bp, e};
      }
    }
  }
  return std::nullopt;
}

long long translated_value(const Valuation& v, const Point& x, Subset base) {
  long long out = v.value(base);
  for (int i : subset_indices(base)) out = checked_add(out, x[i]);
  return out;
}

Valuation translate(const Valuation& v, const Point& x) {
  if (x.size() != static_cast<std::size_t>(v.ground().size()))
    throw domain_error("point has wrong dimension");
  std::vector<long long> values;
  values.reserve(v.values().size());
  for (std::size_t i = 0; i < v.family().bases().size(); ++i) {
    long long val = v.value_at(static_cast<int>(i));
    for (int e : subset_indices(v.family().bases()[i])) val = checked_add(val, x[e]);
    values.push_back(val);
  }
  return Valuation(v.family(), std::move(values));
}

std::pair<Subset, long long> maximize(const Valuation& v, Subset start) {
  if (!v.family().contains(start))
    throw domain_error("start is not a base of the family");
  Subset current = start;
  long long current_value = v.value(start);
  for (;;) {
    // Steepest exchange; ties keep the first (e, f) pair in element order.
    Subset best = current;
    long long best_value = current_value;
    for (int e : subset_indices(current)) {
      for (int f : subset_indices(v.ground().full() & ~current)) {
        Subset cand = (current & ~bit(e)) | bit(f);
        int idx = v.family().index_of(cand);
        if (idx < 0) continue;
        if (v.value_at(idx) > best_value) {
          best = cand;
          best_value = v.value_at(idx);
        }
      }
    }
    if (best == current) return {current, current_value};
    current = best;
    current_value = best_value;
  }
}

BaseFamily maximizer_family(const Valuation& v, const Point& x) {
  long long best = 0;
  bool first = true;
  std::vector<long long> vals(v.family().bases().size());
  for (std::size_t i = 0; i < v.family().bases().size(); ++i) {
    vals[i] = translated_value(v, x, v.family().bases()[i]);
    if (first || vals[i] > best) best = vals[i];
    first = false;
  }
  std::vector<Subset> argmax;
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == best) argmax.push_back(v.family().bases()[i]);
  return BaseFamily(v.ground(), v.rank(), std::move(argmax));
}

Simplification simplify(const Valuation& v) {
  const BaseFamily& m = v.family();
  const GroundSet& g = v.ground();
  Subset loops = m.loops();
  std::vector<Subset> classes = m.parallel_classes();

  Subset keep = kEmptySubset;
  std::vector<int> rep_of(g.size(), -1);
  for (Subset cls : classes) {
    int rep = subset_indices(cls).front();
    keep |= bit(rep);
    for (int i : subset_indices(cls)) rep_of[i] = rep;
  }

  std::map<std::string, std::pair<std::string, long long>> removed;
  for (int e = 0; e < g.size(); ++e) {
    if (has(loops, e) || has(keep, e)) continue;
    int f = rep_of[e];
    // alpha of the parallel pair (e, f): v(K+e) - v(K+f), constant over all
    // applicable K. Inconsistency can only come from an (EXC) violation.
    std::optional<long long> alpha;
    for (Subset b : m.bases()) {
      if (!has(b, e)) continue;
      Subset swapped = (b & ~bit(e)) | bit(f);
      if (!m.contains(swapped))
        throw theorem_violation("parallel swap left the family");
      long long a = v.value(b) - v.value(swapped);
      if (!alpha)
        alpha = a;
      else if (*alpha != a)
        throw domain_error("inconsistent parallel offsets for " + g.label(e) +
                           ": the valuation violates the exchange axiom");
    }
    removed[g.label(e)] = {g.label(f), alpha.value_or(0)};
  }

  // Reduced ground keeps the declared order restricted to representatives.
  std::vector<std::string> labels;
  std::vector<int> new_index(g.size(), -1);
  for (int i = 0; i < g.size(); ++i) {
    if (has(keep, i)) {
      new_index[i] = static_cast<int>(labels.size());
      labels.push_back(g.label(i));
    }
  }
  std::vector<Subset> bases;
  std::vector<long long> values;
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    Subset b = m.bases()[i];
    if (!subset_of(b, keep)) continue;
    Subset nb = kEmptySubset;
    for (int e : subset_indices(b)) nb |= bit(new_index[e]);
    bases.push_back(nb);
    values.push_back(v.value_at(static_cast<int>(i)));
  }
  // Mapping kept bases preserves lex order, so values stay aligned after the
  // BaseFamily constructor re-sorts.
  return Simplification{Valuation(BaseFamily(GroundSet(labels), m.rank(), bases), values),
                        std::move(removed)};
}

bool is_simple(const Valuation& v) { return v.family().is_simple(); }

RationalPoint to_rational(const Point& p) {
  RationalPoint out;
  out.reserve(p.size());
  for (long long c : p) out.emplace_back(c);
  return out;
}

std::optional<RationalPoint> projectively_equivalent(const Valuation& v,
                                                     const Valuation& w) {
  if (!(v.family() == w.family()))
    throw domain_error("projective equivalence needs identical families");
  const BaseFamily& m = v.family();
  const GroundSet& g = v.ground();
  const int n = g.size();

  std::vector<long long> diff(m.bases().size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = w.value_at(static_cast<int>(i)) - v.value_at(static_cast<int>(i));

  if (m.rank() == 0) {
    // Single empty base; only the zero difference is expressible.
    if (diff[0] != 0) return std::nullopt;
    return RationalPoint(n, Rat(0));
  }

  // h(f) - h(e) is forced along every exchange B -> B - e + f. Propagate
  // these differences over the element exchange graph, one offset per
  // connected component, then fix the free shifts from a single base.
  std::vector<long long> offset(n, 0);
  std::vector<int> comp(n, -1);
  int comp_count = 0;
  Subset loops = m.loops();
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0 || has(loops, s)) continue;
    comp[s] = comp_count;
    offset[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int e = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < m.bases().size(); ++i) {
        Subset b = m.bases()[i];
        bool e_in = has(b, e);
        for (int f = 0; f < n; ++f) {
          if (f == e || has(loops, f)) continue;
          Subset other;
          if (e_in && !has(b, f))
            other = (b & ~bit(e)) | bit(f);
          else if (!e_in && has(b, f))
            other = (b & ~bit(f)) | bit(e);
          else
            continue;
          int j = m.index_of(other);
          if (j < 0) continue;
          // h(f) = h(e) + diff(B - e + f) - diff(B) when e in B.
          long long d = e_in ? diff[j] - diff[i] : diff[i] - diff[static_cast<std::size_t>(j)];
          if (comp[f] < 0) {
            comp[f] = comp[e];
            offset[f] = offset[e] + d;
            stack.push_back(f);
          } else if (offset[f] != offset[e] + d) {
            return std::nullopt;  // inconsistent differences
          }
        }
      }
    }
    ++comp_count;
  }

  // Every base meets component c in a fixed count r_c, so a single base pins
  // the free shifts; put the whole residue on the first component.
  Subset b0 = m.bases().front();
  std::vector<long long> comp_rank(comp_count, 0);
  long long base_offset_sum = 0;
  for (int e : subset_indices(b0)) {
    comp_rank[comp[e]] += 1;
    base_offset_sum += offset[e];
  }
  std::vector<Rat> shift(comp_count, Rat(0));
  if (comp_count > 0)
    shift[comp[subset_indices(b0).front()]] =
        Rat(diff[0] - base_offset_sum, comp_rank[comp[subset_indices(b0).front()]]);

  RationalPoint h(n, Rat(0));
  for (int e = 0; e < n; ++e)
    if (comp[e] >= 0) h[e] = Rat(offset[e]) + shift[comp[e]];

  // The propagation only produces a candidate; correctness is the full check.
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    Rat sum(0);
    for (int e : subset_indices(m.bases()[i])) sum += h[e];
    if (sum != Rat(diff[i])) return std::nullopt;
  }
  return h;
}

}  // namespace valmat
