#include "grm/decompose.hpp"

#include <optional>
#include <string>

#include "grm/errors.hpp"

namespace grm {

namespace {

bool is_idempotent(const RepMorphism& e) {
  for (std::size_t v = 0; v < e.comps.size(); ++v)
    if (!(e.comps[v].mul(e.comps[v]) == e.comps[v])) return false;
  return true;
}

bool is_identity(const RepMorphism& e) {
  for (std::size_t v = 0; v < e.comps.size(); ++v)
    if (!(e.comps[v] == FpMat::identity(e.comps[v].rows(), e.source.field))) return false;
  return true;
}

std::optional<RepMorphism> find_nontrivial_idempotent(const QuiverRep& x,
                                                      std::uint64_t budget) {
  std::vector<RepMorphism> basis = hom_basis(x, x);
  std::optional<RepMorphism> found;
  scan_hom_space(x, x, basis, budget, "endomorphism enumeration budget",
                 [&](const RepMorphism& e) {
                   if (e.is_zero() || !is_idempotent(e) || is_identity(e)) return false;
                   found = e;
                   return true;
                 });
  return found;
}

}  // namespace

bool is_indecomposable(const QuiverRep& x, std::uint64_t budget) {
  x.check_valid();
  if (x.is_zero_rep()) throw InputError("the zero representation is not indecomposable");
  return !find_nontrivial_idempotent(x, budget).has_value();
}

std::vector<QuiverRep> decompose(const QuiverRep& x, std::uint64_t budget) {
  x.check_valid();
  std::vector<QuiverRep> factors;
  std::vector<QuiverRep> work;
  if (!x.is_zero_rep()) work.push_back(x);
  while (!work.empty()) {
    QuiverRep current = std::move(work.back());
    work.pop_back();
    auto idem = find_nontrivial_idempotent(current, budget);
    if (!idem) {
      factors.push_back(std::move(current));
      continue;
    }
    work.push_back(image(*idem).rep);
    work.push_back(kernel(*idem).rep);
  }
  return factors;
}

namespace {

// Ascending dimension vectors with the given total, lexicographic in vertex
// order.
void dimension_vectors(std::size_t vertex_count, std::size_t total,
                       std::vector<std::size_t>& prefix,
                       std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() + 1 == vertex_count) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t d = 0; d <= total; ++d) {
    prefix.push_back(d);
    dimension_vectors(vertex_count, total - d, prefix, out);
    prefix.pop_back();
  }
}

std::string dim_vector_string(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(dims[v]);
  }
  return out + ")";
}

}  // namespace

std::vector<QuiverRep> enumerate_indecomposables(std::shared_ptr<const Quiver> quiver,
                                                 PrimeField field, std::uint32_t max_length,
                                                 std::uint64_t budget) {
  if (max_length < 1) throw InputError("max_length must be at least 1");
  std::vector<QuiverRep> found;
  for (std::size_t total = 1; total <= max_length; ++total) {
    std::vector<std::vector<std::size_t>> dim_vectors;
    std::vector<std::size_t> prefix;
    dimension_vectors(quiver->vertex_count(), total, prefix, dim_vectors);
    for (const auto& dims : dim_vectors) {
      std::size_t entries = 0;
      for (std::size_t a = 0; a < quiver->arrow_count(); ++a)
        entries += dims[quiver->arrow(a).dst] * dims[quiver->arrow(a).src];
      try {
        check_enumeration_budget(field, entries, budget, "enumeration budget");
      } catch (const BudgetError& e) {
        throw BudgetError(std::string(e.what()) + " at dimension vector " +
                          dim_vector_string(dims));
      }

      std::vector<QuiverRep> classes;  // pairwise non-isomorphic, this vector only
      QuiverRep rep = QuiverRep::zero(quiver, field, dims);
      std::vector<std::pair<std::size_t, std::size_t>> slots;  // (arrow, flat index)
      for (std::size_t a = 0; a < quiver->arrow_count(); ++a)
        for (std::size_t k = 0; k < rep.mats[a].rows() * rep.mats[a].cols(); ++k)
          slots.emplace_back(a, k);

      std::vector<std::uint32_t> digits(slots.size(), 0);
      const std::uint32_t p = field.p();
      for (;;) {
        for (std::size_t s = 0; s < slots.size(); ++s) {
          auto [a, k] = slots[s];
          rep.mats[a](k / rep.mats[a].cols(), k % rep.mats[a].cols()) = digits[s];
        }
        bool fresh = is_indecomposable(rep, budget);
        for (std::size_t c = 0; c < classes.size() && fresh; ++c)
          if (iso_test(rep, classes[c], budget)) fresh = false;
        if (fresh) classes.push_back(rep);

        std::size_t i = 0;
        while (i < digits.size()) {
          if (++digits[i] < p) break;
          digits[i] = 0;
          ++i;
        }
        if (i == digits.size()) break;
      }
      for (QuiverRep& c : classes) found.push_back(std::move(c));
    }
  }
  return found;
}

}  // namespace grm
