#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grm/quiver.hpp"

namespace grm {

/// Labels for the classical indecomposables of the two-arrow quiver:
/// preprojectives P_n (dims (n-1, n)), regulars R_n(alpha, beta) indexed by
/// points of the projective line (dims (n, n)) and preinjectives Q_n
/// (dims (n, n-1)).
struct KroneckerLabel {
  enum class Kind { P, R, Q };

  Kind kind;
  std::uint32_t n = 1;
  std::pair<std::uint32_t, std::uint32_t> param{0, 0};  // canonical, R only

  static KroneckerLabel preprojective(std::uint32_t n);
  static KroneckerLabel preinjective(std::uint32_t n);
  /// Canonicalizes (alpha, beta) to (1, beta/alpha) or (0, 1); rejects (0,0).
  static KroneckerLabel regular(std::uint32_t n, std::uint32_t alpha, std::uint32_t beta,
                                PrimeField field);

  std::uint32_t length() const;  // 2n-1 for P and Q, 2n for R
  std::string to_string() const;  // "P1", "R2(1:1)", "Q3"

  bool operator==(const KroneckerLabel&) const = default;
};

/// The canonical matrices: P_n carries the two full-rank shift embeddings,
/// Q_n their transposes, R_n(1,b) the identity and b*I + J with J the
/// nilpotent lower shift, R_n(0,1) the pair (J, I).
QuiverRep kronecker_rep(const KroneckerLabel& label, PrimeField field,
                        std::shared_ptr<const Quiver> quiver);

/// Every built-in of length <= max_length: P_n and Q_n for 2n-1 <= L and
/// R_n at all p+1 points of the projective line for 2n <= L. Deterministic
/// order: by length, P before R before Q, parameters ascending.
std::vector<std::pair<KroneckerLabel, QuiverRep>> kronecker_builtins(
    PrimeField field, std::uint32_t max_length, std::shared_ptr<const Quiver> quiver);

}  // namespace grm
