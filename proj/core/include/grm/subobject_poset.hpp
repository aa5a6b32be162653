#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grm/gr_measure.hpp"
#include "grm/hom.hpp"
#include "grm/measured_poset.hpp"
#include "grm/quiver.hpp"

namespace grm {

/// Pairwise non-isomorphic indecomposables ordered by monomorphism
/// existence, with total dimension as the length function. Poset element i
/// is reps[i]/names[i].
struct SubobjectPoset {
  std::vector<QuiverRep> reps;
  std::vector<std::string> names;
  MeasuredPoset poset;
};

/// Deterministic display names: concatenated dimension digits when every
/// dimension is a single digit ("110"), dash-joined otherwise; classes
/// sharing a dimension vector get "#k" suffixes in input order.
std::vector<std::string> default_rep_names(const std::vector<QuiverRep>& reps);

/// Evaluates exists_mono on every ordered pair whose total dimensions
/// strictly increase and whose dimension vectors fit; rejects isomorphic
/// duplicates. The result always passes validate().
SubobjectPoset build_subobject_poset(std::vector<QuiverRep> reps,
                                     std::vector<std::string> names,
                                     std::uint64_t budget = kDefaultBudget);

/// The Gabriel-Roiter measure of the subobject poset.
GRResult category_gr_measure(const SubobjectPoset& sp);

/// A strict inclusion sub -> sup attaining the maximal measure among the
/// strict subobjects of sup, with one monomorphism witnessing it.
struct GRInclusion {
  std::size_t sub;
  std::size_t sup;
  RepMorphism witness;
};

struct GRPredecessors {
  std::vector<GRInclusion> preds;  // every predecessor attaining the max
  bool simple = false;             // set when y has no strict subobject of length 1 less...
};

/// All Gabriel-Roiter predecessors of y with witnesses; empty with the
/// simple flag when y has length 1.
GRPredecessors gr_predecessors(const SubobjectPoset& sp, const GRResult& result, std::size_t y,
                               std::uint64_t budget = kDefaultBudget);

/// Measure of an arbitrary (possibly decomposable) representation: the
/// lexicographic maximum over the measures of its indecomposable factors,
/// matched into the poset by iso_test. Unmatched factors raise InputError
/// ("summand outside poset").
NatChain extended_measure(const QuiverRep& x, const SubobjectPoset& sp, const GRResult& result,
                          std::uint64_t budget = kDefaultBudget);

}  // namespace grm
