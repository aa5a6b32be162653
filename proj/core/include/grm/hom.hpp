#pragma once

#include <cstdint>
#include <vector>

#include "grm/quiver.hpp"

namespace grm {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 20;

/// Throws BudgetError if p^dim > budget. `what` names the blocking step.
void check_enumeration_budget(PrimeField field, std::size_t dim, std::uint64_t budget,
                              const char* what);

/// Basis of the space of morphisms X -> Y: the kernel of the stacked
/// intertwining system comps[t(a)] * X_a - Y_a * comps[s(a)] = 0.
std::vector<RepMorphism> hom_basis(const QuiverRep& x, const QuiverRep& y);

/// The morphism with the given coordinates in a hom_basis.
RepMorphism hom_element(const QuiverRep& x, const QuiverRep& y,
                        const std::vector<RepMorphism>& basis,
                        const std::vector<std::uint32_t>& coords);

/// Enumerates the whole Hom space (p^dim elements, zero map included) until
/// `visit` returns true; returns whether any visit did. Deterministic
/// odometer order over basis coordinates.
bool scan_hom_space(const QuiverRep& x, const QuiverRep& y,
                    const std::vector<RepMorphism>& basis, std::uint64_t budget,
                    const char* what, bool (*visit)(const RepMorphism&, void*), void* ctx);

template <typename Visit>
bool scan_hom_space(const QuiverRep& x, const QuiverRep& y,
                    const std::vector<RepMorphism>& basis, std::uint64_t budget,
                    const char* what, Visit&& visit) {
  auto thunk = [](const RepMorphism& m, void* ctx) -> bool {
    return (*static_cast<Visit*>(ctx))(m);
  };
  return scan_hom_space(x, y, basis, budget, what, thunk, &visit);
}

/// True iff some morphism X -> Y is injective at every vertex. Exhaustive
/// over the Hom space; exceeding the budget raises
/// BudgetError("hom enumeration budget ...").
bool exists_mono(const QuiverRep& x, const QuiverRep& y,
                 std::uint64_t budget = kDefaultBudget);

/// False immediately when dimension vectors differ, else true iff some
/// element of Hom(X, Y) is invertible at every vertex.
bool iso_test(const QuiverRep& x, const QuiverRep& y,
              std::uint64_t budget = kDefaultBudget);

struct SubObject {
  QuiverRep rep;
  RepMorphism inclusion;  // rep -> ambient
};

struct QuotObject {
  QuiverRep rep;
  RepMorphism projection;  // ambient -> rep
};

SubObject kernel(const RepMorphism& f);
SubObject image(const RepMorphism& f);
QuotObject cokernel(const RepMorphism& f);

/// Largest semisimple subrepresentation: at each vertex the intersection of
/// the kernels of all outgoing arrow matrices; all arrows act by zero.
SubObject socle(const QuiverRep& x);

}  // namespace grm
