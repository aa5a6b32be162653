#include "grm/hom.hpp"

#include <string>

#include "grm/errors.hpp"

namespace grm {

void check_enumeration_budget(PrimeField field, std::size_t dim, std::uint64_t budget,
                              const char* what) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (count > budget / field.p()) {
      throw BudgetError(std::string(what) + ": p^" + std::to_string(dim) +
                        " combinations exceed budget " + std::to_string(budget));
    }
    count *= field.p();
  }
  if (count > budget)
    throw BudgetError(std::string(what) + ": p^" + std::to_string(dim) +
                      " combinations exceed budget " + std::to_string(budget));
}

std::vector<RepMorphism> hom_basis(const QuiverRep& x, const QuiverRep& y) {
  require_compatible(x, y);
  x.check_valid();
  y.check_valid();
  const Quiver& q = *x.quiver;
  PrimeField f = x.field;

  // Unknowns: vec(comps[v]) blocks, row-major, vertices in order.
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
  std::size_t unknowns = offset.back();

  std::size_t equations = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    equations += y.dims[q.arrow(a).dst] * x.dims[q.arrow(a).src];

  FpMat system(equations, unknowns, f);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    std::size_t s = arrow.src, t = arrow.dst;
    // (comps[t] X_a)[i][j] - (Y_a comps[s])[i][j] = 0
    for (std::size_t i = 0; i < y.dims[t]; ++i)
      for (std::size_t j = 0; j < x.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < x.dims[t]; ++k) {
          std::size_t var = offset[t] + i * x.dims[t] + k;
          system(row, var) = f.add(system(row, var), x.mats[a](k, j));
        }
        for (std::size_t k = 0; k < y.dims[s]; ++k) {
          std::size_t var = offset[s] + k * x.dims[s] + j;
          system(row, var) = f.sub(system(row, var), y.mats[a](i, k));
        }
      }
  }

  FpMat null_space = system.kernel_basis();
  std::vector<RepMorphism> basis;
  for (std::size_t b = 0; b < null_space.cols(); ++b) {
    RepMorphism m;
    m.source = x;
    m.target = y;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      FpMat comp(y.dims[v], x.dims[v], f);
      for (std::size_t i = 0; i < y.dims[v]; ++i)
        for (std::size_t j = 0; j < x.dims[v]; ++j)
          comp(i, j) = null_space(offset[v] + i * x.dims[v] + j, b);
      m.comps.push_back(std::move(comp));
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

RepMorphism hom_element(const QuiverRep& x, const QuiverRep& y,
                        const std::vector<RepMorphism>& basis,
                        const std::vector<std::uint32_t>& coords) {
  RepMorphism m;
  m.source = x;
  m.target = y;
  for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v)
    m.comps.emplace_back(y.dims[v], x.dims[v], x.field);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (coords[b] == 0) continue;
    for (std::size_t v = 0; v < m.comps.size(); ++v)
      m.comps[v] = m.comps[v].add(basis[b].comps[v].scale(coords[b]));
  }
  return m;
}

bool scan_hom_space(const QuiverRep& x, const QuiverRep& y,
                    const std::vector<RepMorphism>& basis, std::uint64_t budget,
                    const char* what, bool (*visit)(const RepMorphism&, void*), void* ctx) {
  check_enumeration_budget(x.field, basis.size(), budget, what);
  std::vector<std::uint32_t> coords(basis.size(), 0);
  const std::uint32_t p = x.field.p();
  for (;;) {
    if (visit(hom_element(x, y, basis, coords), ctx)) return true;
    std::size_t i = 0;
    while (i < coords.size()) {
      if (++coords[i] < p) break;
      coords[i] = 0;
      ++i;
    }
    if (i == coords.size()) return false;
  }
}

bool exists_mono(const QuiverRep& x, const QuiverRep& y, std::uint64_t budget) {
  require_compatible(x, y);
  if (!dims_fit_inside(x, y)) return false;
  std::vector<RepMorphism> basis = hom_basis(x, y);
  return scan_hom_space(x, y, basis, budget, "hom enumeration budget",
                        [](const RepMorphism& m) { return m.is_mono(); });
}

bool iso_test(const QuiverRep& x, const QuiverRep& y, std::uint64_t budget) {
  require_compatible(x, y);
  if (!same_dims(x, y)) return false;
  std::vector<RepMorphism> basis = hom_basis(x, y);
  return scan_hom_space(x, y, basis, budget, "hom enumeration budget",
                        [](const RepMorphism& m) { return m.is_iso(); });
}

namespace {

// Assembles the subrepresentation spanned by the given per-vertex bases,
// which must be arrow-stable in the ambient representation.
SubObject sub_from_bases(const QuiverRep& ambient, std::vector<FpMat> bases) {
  const Quiver& q = *ambient.quiver;
  std::vector<std::size_t> dims;
  for (const FpMat& b : bases) dims.push_back(b.cols());
  QuiverRep rep = QuiverRep::zero(ambient.quiver, ambient.field, dims);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    FpMat mapped = ambient.mats[a].mul(bases[arrow.src]);
    auto coords = bases[arrow.dst].solve(mapped);
    if (!coords.ok) throw InputError("subspace family is not arrow-stable");
    rep.mats[a] = std::move(coords.x);
  }
  RepMorphism inclusion;
  inclusion.source = rep;
  inclusion.target = ambient;
  inclusion.comps = std::move(bases);
  return SubObject{std::move(rep), std::move(inclusion)};
}

}  // namespace

SubObject kernel(const RepMorphism& f) {
  std::vector<FpMat> bases;
  for (const FpMat& comp : f.comps) bases.push_back(comp.kernel_basis());
  return sub_from_bases(f.source, std::move(bases));
}

SubObject image(const RepMorphism& f) {
  std::vector<FpMat> bases;
  for (const FpMat& comp : f.comps) bases.push_back(comp.column_space_basis());
  return sub_from_bases(f.target, std::move(bases));
}

QuotObject cokernel(const RepMorphism& f) {
  const QuiverRep& ambient = f.target;
  const Quiver& q = *ambient.quiver;
  PrimeField field = ambient.field;

  // Per vertex: complement the image by standard vectors at non-pivot rows,
  // then read quotient coordinates off the inverse of [image | complement].
  std::vector<FpMat> sections;     // complement embeddings C_v -> Y_v
  std::vector<FpMat> projections;  // Y_v -> C_v
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    FpMat im = f.comps[v].column_space_basis();
    std::vector<std::size_t> pivots = im.pivot_rows();
    std::vector<char> is_pivot(ambient.dims[v], 0);
    for (std::size_t r : pivots) is_pivot[r] = 1;
    std::vector<std::size_t> complement;
    for (std::size_t r = 0; r < ambient.dims[v]; ++r)
      if (!is_pivot[r]) complement.push_back(r);
    FpMat section(ambient.dims[v], complement.size(), field);
    for (std::size_t k = 0; k < complement.size(); ++k) section(complement[k], k) = 1;
    FpMat u = im.hconcat(section);
    auto u_inv = u.inverse();
    if (!u_inv.ok) throw InputError("cokernel basis extension failed");
    projections.push_back(u_inv.x.row_slice(im.cols(), ambient.dims[v]));
    sections.push_back(std::move(section));
    dims.push_back(complement.size());
  }

  QuiverRep rep = QuiverRep::zero(ambient.quiver, field, dims);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    rep.mats[a] = projections[arrow.dst].mul(ambient.mats[a]).mul(sections[arrow.src]);
  }
  RepMorphism projection;
  projection.source = ambient;
  projection.target = rep;
  projection.comps = std::move(projections);
  return QuotObject{std::move(rep), std::move(projection)};
}

SubObject socle(const QuiverRep& x) {
  x.check_valid();
  const Quiver& q = *x.quiver;
  std::vector<FpMat> bases;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    // Stack every outgoing arrow matrix; the common kernel survives.
    FpMat stacked(0, x.dims[v], x.field);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).src == v) stacked = stacked.vconcat(x.mats[a]);
    bases.push_back(stacked.kernel_basis());
  }
  return sub_from_bases(x, std::move(bases));
}

}  // namespace grm
