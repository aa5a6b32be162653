#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grm {

/// A finite set of positive naturals, stored strictly ascending.
///
/// Chains are compared lexicographically:
///   X <= Y  iff  min(Y\X) <= min(X\Y),  with min of the empty set infinite.
/// Under this order subsets of {1,2,3} sort as
///   {} < {3} < {2} < {2,3} < {1} < {1,3} < {1,2} < {1,2,3},
/// i.e. chains containing smaller naturals compare larger.
class NatChain {
 public:
  NatChain() = default;

  /// Validates: strictly ascending, all values >= 1. Throws InputError.
  explicit NatChain(std::vector<std::uint32_t> ascending);

  static NatChain singleton(std::uint32_t value);

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  const std::vector<std::uint32_t>& values() const { return values_; }

  /// Maximum element; throws InputError on the empty chain.
  std::uint32_t max() const;

  bool contains(std::uint32_t v) const;
  bool subset_of(const NatChain& other) const;

  bool operator==(const NatChain&) const = default;
  std::strong_ordering operator<=>(const NatChain& other) const;

 private:
  std::vector<std::uint32_t> values_;
};

std::strong_ordering lex_compare(const NatChain& x, const NatChain& y);

/// Direct transcription of the min(Y\X) <= min(X\Y) rule. Kept as an
/// independent implementation; tests assert exhaustive agreement with
/// lex_compare.
std::strong_ordering lex_compare_reference(const NatChain& x, const NatChain& y);

/// X without its maximum. Throws InputError on the empty chain.
NatChain drop_max(const NatChain& x);

/// X with n appended; requires n > max X (or X empty).
NatChain extend(const NatChain& x, std::uint32_t n);

/// Text form: comma-joined ascending values, the empty chain is "-".
std::string to_string(const NatChain& x);
NatChain parse_chain(std::string_view literal);

/// Exact value of sum_{x in X} 2^-x, canonical num/2^k with num odd or zero.
/// Supports elements up to 127; beyond that construction throws OverflowError.
struct DyadicValue {
  unsigned __int128 num = 0;
  int log2_den = 0;

  bool operator==(const DyadicValue&) const = default;
  std::strong_ordering operator<=>(const DyadicValue& other) const;
};

DyadicValue dyadic_value(const NatChain& x);

/// "num/2^k" with both parts in decimal; "0" for the zero value.
std::string to_string(const DyadicValue& v);

}  // namespace grm
