#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grm/prime_field.hpp"

namespace grm {

struct Arrow {
  std::string name;
  std::size_t src;
  std::size_t dst;
};

/// A finite acyclic quiver. Acyclicity is validated at construction, which
/// keeps the length of a representation equal to its total dimension.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex(std::size_t i) const { return vertices_[i]; }
  const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
  std::optional<std::size_t> vertex_index(std::string_view name) const;
  std::optional<std::size_t> arrow_index(std::string_view name) const;

  bool operator==(const Quiver&) const = default;

  /// The fan 1 <- 2 -> 3 (arrows a: 2->1, b: 2->3).
  static std::shared_ptr<const Quiver> a3_paper();
  /// The equioriented line 1 -> 2 -> ... -> n.
  static std::shared_ptr<const Quiver> linear(std::size_t n);
  /// Two parallel arrows a, b: 1 -> 2.
  static std::shared_ptr<const Quiver> kronecker();

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A representation: one dimension per vertex and, per arrow, a matrix of
/// shape (dim target) x (dim source) acting on column vectors.
struct QuiverRep {
  std::shared_ptr<const Quiver> quiver;
  PrimeField field{2};
  std::vector<std::size_t> dims;
  std::vector<FpMat> mats;  // per arrow index

  static QuiverRep zero(std::shared_ptr<const Quiver> quiver, PrimeField field,
                        std::vector<std::size_t> dims);

  std::size_t total_dim() const;
  std::size_t length() const { return total_dim(); }
  bool is_zero_rep() const { return total_dim() == 0; }

  /// Shape consistency; throws InputError on mismatch.
  void check_valid() const;

  /// "(d1,d2,...)" in vertex order.
  std::string dim_string() const;
};

/// Same quiver (structurally) and same field; throws InputError otherwise.
void require_compatible(const QuiverRep& x, const QuiverRep& y);

bool same_dims(const QuiverRep& x, const QuiverRep& y);
bool dims_fit_inside(const QuiverRep& x, const QuiverRep& y);  // dims(x) <= dims(y) vertexwise

/// Simple representation at one vertex.
QuiverRep simple_rep(std::shared_ptr<const Quiver> quiver, PrimeField field,
                     std::size_t vertex);

/// Block-diagonal direct sum; all parts over one quiver and field.
QuiverRep direct_sum(const std::vector<QuiverRep>& parts);

/// A morphism of representations: one matrix per vertex with
/// comps[target(a)] * X_a = Y_a * comps[source(a)] at every arrow a.
struct RepMorphism {
  QuiverRep source;
  QuiverRep target;
  std::vector<FpMat> comps;

  bool intertwines() const;
  bool is_mono() const;  // injective at every vertex
  bool is_iso() const;
  bool is_zero() const;
};

RepMorphism identity_morphism(const QuiverRep& x);

/// Text format, shared with the CLI:
///   v <name>                      vertex
///   a <name> <src> <dst>          arrow
///   rep <name>                    begins a representation block
///   dim <vertex> <n>              dimension at a vertex (default 0)
///   mat <arrow> <e1> <e2> ...     row-major entries, reduced mod p
struct QuiverFile {
  std::shared_ptr<const Quiver> quiver;
  std::vector<std::string> rep_names;
  std::vector<QuiverRep> reps;
};

QuiverFile load_quiver(std::istream& in, PrimeField field);
QuiverFile load_quiver_file(const std::string& path, PrimeField field);

}  // namespace grm
