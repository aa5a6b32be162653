#include "grm/kronecker.hpp"

#include <algorithm>

#include "grm/errors.hpp"

namespace grm {

KroneckerLabel KroneckerLabel::preprojective(std::uint32_t n) {
  if (n < 1) throw InputError("label index must be positive");
  return KroneckerLabel{Kind::P, n, {0, 0}};
}

KroneckerLabel KroneckerLabel::preinjective(std::uint32_t n) {
  if (n < 1) throw InputError("label index must be positive");
  return KroneckerLabel{Kind::Q, n, {0, 0}};
}

KroneckerLabel KroneckerLabel::regular(std::uint32_t n, std::uint32_t alpha,
                                       std::uint32_t beta, PrimeField field) {
  if (n < 1) throw InputError("label index must be positive");
  alpha %= field.p();
  beta %= field.p();
  if (alpha == 0 && beta == 0) throw InputError("regular parameter (0,0) is not projective");
  if (alpha != 0) return KroneckerLabel{Kind::R, n, {1, field.mul(beta, field.inv(alpha))}};
  return KroneckerLabel{Kind::R, n, {0, 1}};
}

std::uint32_t KroneckerLabel::length() const { return kind == Kind::R ? 2 * n : 2 * n - 1; }

std::string KroneckerLabel::to_string() const {
  switch (kind) {
    case Kind::P:
      return "P" + std::to_string(n);
    case Kind::Q:
      return "Q" + std::to_string(n);
    case Kind::R:
      return "R" + std::to_string(n) + "(" + std::to_string(param.first) + ":" +
             std::to_string(param.second) + ")";
  }
  return {};
}

namespace {

// n x (n-1) embeddings: identity into the first n-1 rows, and into the last.
FpMat shift_top(std::uint32_t n, PrimeField f) {
  FpMat m(n, n - 1, f);
  for (std::uint32_t i = 0; i + 1 < n; ++i) m(i, i) = 1;
  return m;
}

FpMat shift_bottom(std::uint32_t n, PrimeField f) {
  FpMat m(n, n - 1, f);
  for (std::uint32_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  return m;
}

FpMat jordan_nilpotent(std::uint32_t n, PrimeField f) {
  FpMat m(n, n, f);
  for (std::uint32_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  return m;
}

}  // namespace

QuiverRep kronecker_rep(const KroneckerLabel& label, PrimeField field,
                        std::shared_ptr<const Quiver> quiver) {
  if (quiver->vertex_count() != 2 || quiver->arrow_count() != 2)
    throw InputError("kronecker representations need the two-arrow quiver");
  QuiverRep rep;
  const std::uint32_t n = label.n;
  switch (label.kind) {
    case KroneckerLabel::Kind::P:
      rep = QuiverRep::zero(quiver, field, {n - 1, n});
      rep.mats[0] = shift_top(n, field);
      rep.mats[1] = shift_bottom(n, field);
      break;
    case KroneckerLabel::Kind::Q:
      rep = QuiverRep::zero(quiver, field, {n, n - 1});
      rep.mats[0] = shift_top(n, field).transpose();
      rep.mats[1] = shift_bottom(n, field).transpose();
      break;
    case KroneckerLabel::Kind::R: {
      rep = QuiverRep::zero(quiver, field, {n, n});
      FpMat j = jordan_nilpotent(n, field);
      if (label.param.first == 1) {
        rep.mats[0] = FpMat::identity(n, field);
        rep.mats[1] = FpMat::identity(n, field).scale(label.param.second).add(j);
      } else {
        rep.mats[0] = j;
        rep.mats[1] = FpMat::identity(n, field);
      }
      break;
    }
  }
  return rep;
}

std::vector<std::pair<KroneckerLabel, QuiverRep>> kronecker_builtins(
    PrimeField field, std::uint32_t max_length, std::shared_ptr<const Quiver> quiver) {
  std::vector<KroneckerLabel> labels;
  for (std::uint32_t n = 1; 2 * n - 1 <= max_length; ++n) {
    labels.push_back(KroneckerLabel::preprojective(n));
    labels.push_back(KroneckerLabel::preinjective(n));
  }
  for (std::uint32_t n = 1; 2 * n <= max_length; ++n) {
    labels.push_back(KroneckerLabel::regular(n, 0, 1, field));
    for (std::uint32_t beta = 0; beta < field.p(); ++beta)
      labels.push_back(KroneckerLabel::regular(n, 1, beta, field));
  }
  std::sort(labels.begin(), labels.end(), [](const KroneckerLabel& a, const KroneckerLabel& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.param < b.param;
  });
  std::vector<std::pair<KroneckerLabel, QuiverRep>> out;
  for (const KroneckerLabel& label : labels)
    out.emplace_back(label, kronecker_rep(label, field, quiver));
  return out;
}

}  // namespace grm
