#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grm {

/// A finite strict poset with a length value per element. The strict-below
/// relation is closed transitively at construction; the raw input may contain
/// redundant (non-cover) pairs.
class MeasuredPoset {
 public:
  MeasuredPoset() = default;

  /// Builds from named elements, lengths and strict-below pairs (indices into
  /// the name list). Closes the relation transitively. Does not reject cycles
  /// or monotonicity failures; validate() reports those.
  static MeasuredPoset from_relations(std::vector<std::string> names,
                                      std::vector<std::uint32_t> lengths,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& below);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::uint32_t length(std::size_t i) const { return lengths_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Strict relation after transitive closure.
  bool below(std::size_t x, std::size_t y) const { return below_[x * size() + y]; }

  std::vector<std::size_t> predecessors(std::size_t x) const;
  std::vector<std::size_t> successors(std::size_t x) const;

  /// Pairs (x, y) with y covering x (transitive reduction). Sorted by (x, y).
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  /// Element indices sorted by (length, index); a linear extension whenever
  /// the poset validates.
  std::vector<std::size_t> topological_order() const;

  /// Subposet of the elements with length <= max_length.
  MeasuredPoset restrict_max_length(std::uint32_t max_length) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> lengths_;
  std::vector<char> below_;  // size() * size(), row-major, transitively closed
};

struct PosetViolation {
  std::string kind;  // "cycle" | "monotonicity" | "length"
  std::string first;
  std::string second;
  std::string message;
};

/// Checks that the closed relation is irreflexive (acyclic input) and that
/// x < y implies length(x) < length(y), and that lengths are positive.
/// Returns the first violation found, scanning elements in index order.
std::optional<PosetViolation> validate(const MeasuredPoset& poset);

/// Line-based text format. '#' starts a comment.
///   e <name> <length>   declare an element (positive integer length)
///   r <name1> <name2>   declare name1 strictly below name2
/// Unknown directives, duplicate or unknown names raise InputError.
MeasuredPoset load_poset(std::istream& in);
MeasuredPoset load_poset_file(const std::string& path);

}  // namespace grm
