#include "grm/gr_measure.hpp"

#include <algorithm>
#include <map>

#include "grm/errors.hpp"

namespace grm {

GRResult group_measures(const MeasuredPoset& poset, std::vector<NatChain> measure) {
  if (measure.size() != poset.size())
    throw InputError("measure mapping size does not match poset");
  GRResult r;
  r.measure = std::move(measure);
  std::map<NatChain, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < poset.size(); ++i) r.class_index.push_back(0);
  for (std::size_t i = 0; i < poset.size(); ++i) grouped[r.measure[i]].push_back(i);
  for (auto& [value, members] : grouped) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return poset.name(a) < poset.name(b);
    });
    for (std::size_t m : members) r.class_index[m] = r.class_order.size();
    r.class_order.push_back(value);
    r.classes.push_back(std::move(members));
  }
  return r;
}

GRResult gr_measure(const MeasuredPoset& poset) {
  if (auto violation = validate(poset))
    throw InputError("invalid poset: " + violation->message);
  std::vector<NatChain> measure(poset.size());
  for (std::size_t x : poset.topological_order()) {
    NatChain best;  // empty chain when there is no predecessor
    for (std::size_t i = 0; i < poset.size(); ++i)
      if (poset.below(i, x) && best < measure[i]) best = measure[i];
    measure[x] = extend(best, poset.length(x));
  }
  return group_measures(poset, std::move(measure));
}

namespace {

// Enumerates every chain of the poset whose maximum is `top`, invoking
// visit(length_set) per chain. Iterative; the stack holds partial chains
// being extended downward.
template <typename Visit>
void for_each_chain_ending_at(const MeasuredPoset& poset, std::size_t top,
                              std::uint64_t& chain_count, std::uint64_t max_chains,
                              Visit&& visit) {
  struct Frame {
    std::size_t bottom;        // current minimal element of the chain
    std::size_t next_candidate;  // next element index to try below bottom
  };
  std::vector<std::uint32_t> lengths_desc{poset.length(top)};
  std::vector<Frame> stack{{top, 0}};
  if (++chain_count > max_chains) throw BudgetError("oracle budget: too many chains");
  visit(lengths_desc);
  while (!stack.empty()) {
    Frame& f = stack.back();
    std::size_t y = f.next_candidate;
    for (; y < poset.size(); ++y)
      if (poset.below(y, f.bottom)) break;
    if (y == poset.size()) {
      stack.pop_back();
      lengths_desc.pop_back();
      if (!stack.empty()) ++stack.back().next_candidate;
      continue;
    }
    f.next_candidate = y;
    stack.push_back({y, 0});
    lengths_desc.push_back(poset.length(y));
    if (++chain_count > max_chains) throw BudgetError("oracle budget: too many chains");
    visit(lengths_desc);
  }
}

NatChain chain_from_desc_lengths(const std::vector<std::uint32_t>& lengths_desc) {
  std::vector<std::uint32_t> asc(lengths_desc.rbegin(), lengths_desc.rend());
  return NatChain(std::move(asc));
}

}  // namespace

GRResult gr_measure_oracle(const MeasuredPoset& poset, const OracleBudget& budget) {
  if (auto violation = validate(poset))
    throw InputError("invalid poset: " + violation->message);
  if (poset.size() > budget.max_elements)
    throw BudgetError("oracle budget: poset has " + std::to_string(poset.size()) +
                      " elements, limit " + std::to_string(budget.max_elements));
  std::uint64_t chain_count = 0;
  std::vector<NatChain> measure(poset.size());
  for (std::size_t x = 0; x < poset.size(); ++x) {
    NatChain best;
    for_each_chain_ending_at(poset, x, chain_count, budget.max_chains,
                             [&](const std::vector<std::uint32_t>& lengths_desc) {
                               NatChain candidate = chain_from_desc_lengths(lengths_desc);
                               if (best < candidate) best = std::move(candidate);
                             });
    measure[x] = std::move(best);
  }
  return group_measures(poset, std::move(measure));
}

GRFiltration gr_filtration(const MeasuredPoset& poset, const GRResult& result, std::size_t x) {
  if (x >= poset.size()) throw InputError("element index out of range");
  std::vector<std::size_t> reversed{x};
  std::size_t current = x;
  for (;;) {
    bool found = false;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (!poset.below(i, current)) continue;
      if (!found || result.measure[pick] < result.measure[i] ||
          (result.measure[pick] == result.measure[i] && poset.name(i) < poset.name(pick))) {
        pick = i;
        found = true;
      }
    }
    if (!found) break;
    reversed.push_back(pick);
    current = pick;
  }
  GRFiltration f;
  f.steps.assign(reversed.rbegin(), reversed.rend());
  return f;
}

GRFiltration gr_filtration(const MeasuredPoset& poset, std::size_t x) {
  return gr_filtration(poset, gr_measure(poset), x);
}

std::vector<NatChain> immediate_successors(const MeasuredPoset& poset, const GRResult& result,
                                           std::size_t x) {
  if (x >= poset.size()) throw InputError("element index out of range");
  std::size_t c = result.class_index[x];
  if (c + 1 < result.class_order.size()) return {result.class_order[c + 1]};
  return {};
}

namespace {

void report(AxiomReport& out, std::string axiom, std::vector<std::string> elements,
            std::string detail) {
  out.push_back(AxiomViolation{std::move(axiom), std::move(elements), std::move(detail)});
}

}  // namespace

AxiomReport check_measure_axioms(const MeasuredPoset& poset, const GRResult& result) {
  AxiomReport out;
  const auto& m = result.measure;
  const std::size_t n = poset.size();
  auto le = [&](std::size_t a, std::size_t b) { return m[a] <= m[b]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!le(x, y) && !le(y, x))
        report(out, "M2", {poset.name(x), poset.name(y)}, "incomparable measure values");
      for (std::size_t z = 0; z < n; ++z)
        if (le(x, y) && le(y, z) && !le(x, z))
          report(out, "M1", {poset.name(x), poset.name(y), poset.name(z)},
                 "transitivity fails");
      if (poset.below(x, y) && !le(x, y))
        report(out, "M3", {poset.name(x), poset.name(y)},
               poset.name(x) + " < " + poset.name(y) + " but " + to_string(m[x]) + " > " +
                   to_string(m[y]));
    }
  return out;
}

AxiomReport check_refinement_axioms(const MeasuredPoset& poset,
                                    const std::vector<NatChain>& mapping) {
  AxiomReport out;
  if (mapping.size() != poset.size())
    throw InputError("mapping size does not match poset");
  const std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (poset.below(x, y) && !(mapping[x] <= mapping[y]))
        report(out, "P1", {poset.name(x), poset.name(y)},
               poset.name(x) + " < " + poset.name(y) + " but " + to_string(mapping[x]) +
                   " > " + to_string(mapping[y]));
      if (mapping[x] == mapping[y] && poset.length(x) != poset.length(y))
        report(out, "P2", {poset.name(x), poset.name(y)},
               "equal values " + to_string(mapping[x]) + " but lengths differ");
      if (poset.length(x) >= poset.length(y)) {
        bool all_preds_strictly_below = true;
        for (std::size_t p = 0; p < n && all_preds_strictly_below; ++p)
          if (poset.below(p, x) && !(mapping[p] < mapping[y]))
            all_preds_strictly_below = false;
        if (all_preds_strictly_below && !(mapping[x] <= mapping[y]))
          report(out, "P3", {poset.name(x), poset.name(y)},
                 "predecessor condition holds but " + to_string(mapping[x]) + " > " +
                     to_string(mapping[y]));
      }
    }
  return out;
}

}  // namespace grm
