#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grm/measured_poset.hpp"
#include "grm/nat_chain.hpp"

namespace grm {

/// The computed measure of a poset: one chain per element, the partition into
/// equal-measure classes and the ascending list of distinct values.
struct GRResult {
  std::vector<NatChain> measure;            // per element index
  std::vector<std::size_t> class_index;     // per element index
  std::vector<NatChain> class_order;        // distinct values, ascending
  std::vector<std::vector<std::size_t>> classes;  // per class, members sorted by name
};

/// Groups an arbitrary element -> chain mapping into a GRResult (used by the
/// oracle and by deliberately corrupted mappings in tests).
GRResult group_measures(const MeasuredPoset& poset, std::vector<NatChain> measure);

/// Gabriel-Roiter measure by the bottom-up recursion
///   measure(x) = max_{x' < x} measure(x')  extended by  length(x),
/// evaluated over a linear extension; the max over zero predecessors is the
/// empty chain, so minimal elements get {length(x)}.
/// Throws InputError if validate(poset) reports a violation.
GRResult gr_measure(const MeasuredPoset& poset);

struct OracleBudget {
  std::size_t max_elements = 20;
  std::uint64_t max_chains = std::uint64_t(1) << 20;
};

/// Independent brute force: for every element, enumerates every chain of the
/// poset ending there and takes the lexicographic maximum of its length sets.
/// Exceeding the budget raises BudgetError("oracle budget ...").
GRResult gr_measure_oracle(const MeasuredPoset& poset, const OracleBudget& budget = {});

/// A chain x_1 < x_2 < ... < x_k = x with x_1 minimal and each x_{i-1}
/// attaining the maximal measure among the strict predecessors of x_i.
struct GRFiltration {
  std::vector<std::size_t> steps;
};

/// Ties between predecessors of equal measure break toward the
/// lexicographically smallest element name.
GRFiltration gr_filtration(const MeasuredPoset& poset, const GRResult& result, std::size_t x);
GRFiltration gr_filtration(const MeasuredPoset& poset, std::size_t x);

/// Minimal realized measure values strictly above measure(x); at most one
/// value since realized values are totally ordered.
std::vector<NatChain> immediate_successors(const MeasuredPoset& poset, const GRResult& result,
                                           std::size_t x);

struct AxiomViolation {
  std::string axiom;  // "M1" | "M2" | "M3" | "P1" | "P2" | "P3"
  std::vector<std::string> elements;
  std::string detail;
};
using AxiomReport = std::vector<AxiomViolation>;

/// Measure axioms for the relation m(x) <= m(y):
///   (M1) transitivity, (M2) totality, (M3) x <= y implies m(x) <= m(y).
AxiomReport check_measure_axioms(const MeasuredPoset& poset, const GRResult& result);

/// Refinement axioms for a mapping m: element -> chain:
///   (P1) x <= y implies m(x) <= m(y)
///   (P2) m(x) = m(y) implies length(x) = length(y)
///   (P3) m(x') < m(y) for all x' < x and length(x) >= length(y)
///        imply m(x) <= m(y).
AxiomReport check_refinement_axioms(const MeasuredPoset& poset,
                                    const std::vector<NatChain>& mapping);

}  // namespace grm
