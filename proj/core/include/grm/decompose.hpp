#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grm/hom.hpp"
#include "grm/quiver.hpp"

namespace grm {

/// True iff End(X), scanned exhaustively, contains no idempotent besides 0
/// and the identity. Requires X nonzero and p^(dim End X) within budget.
bool is_indecomposable(const QuiverRep& x, std::uint64_t budget = kDefaultBudget);

/// Krull-Remak-Schmidt factors of X, found by splitting along nontrivial
/// idempotents (X = image(e) + kernel(e)) until everything is
/// indecomposable. The zero representation decomposes into no factors.
std::vector<QuiverRep> decompose(const QuiverRep& x, std::uint64_t budget = kDefaultBudget);

/// All indecomposable representations of total dimension <= max_length, one
/// per isomorphism class, by brute force: every dimension vector, every
/// matrix tuple, filtered by is_indecomposable and deduplicated with
/// iso_test. Output order: by length, then dimension vector, then first
/// found. The per-dimension-vector budget failure names the vector.
std::vector<QuiverRep> enumerate_indecomposables(std::shared_ptr<const Quiver> quiver,
                                                 PrimeField field, std::uint32_t max_length,
                                                 std::uint64_t budget = kDefaultBudget);

}  // namespace grm
