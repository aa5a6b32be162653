#include "grm/nat_chain.hpp"

#include <algorithm>
#include <limits>

#include "grm/errors.hpp"

namespace grm {

NatChain::NatChain(std::vector<std::uint32_t> ascending) : values_(std::move(ascending)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) throw InputError("chain elements must be positive");
    if (i > 0 && values_[i] <= values_[i - 1])
      throw InputError("chain elements must be strictly ascending");
  }
}

NatChain NatChain::singleton(std::uint32_t value) {
  return NatChain(std::vector<std::uint32_t>{value});
}

std::uint32_t NatChain::max() const {
  if (values_.empty()) throw InputError("empty chain has no maximum");
  return values_.back();
}

bool NatChain::contains(std::uint32_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

bool NatChain::subset_of(const NatChain& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                       values_.end());
}

// Scan from the smallest element: at the first value present in one chain
// only, the chain holding it wins. A chain that runs out first is a
// front-segment of the other and compares smaller.
std::strong_ordering NatChain::operator<=>(const NatChain& other) const {
  std::size_t i = 0, j = 0;
  while (i < values_.size() && j < other.values_.size()) {
    if (values_[i] == other.values_[j]) {
      ++i;
      ++j;
    } else if (values_[i] < other.values_[j]) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < values_.size()) return std::strong_ordering::greater;
  if (j < other.values_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const NatChain& x, const NatChain& y) { return x <=> y; }

std::strong_ordering lex_compare_reference(const NatChain& x, const NatChain& y) {
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  const auto& xs = x.values();
  const auto& ys = y.values();
  std::uint64_t min_y_minus_x = kInf;  // min(Y\X)
  std::uint64_t min_x_minus_y = kInf;  // min(X\Y)
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    if (j == ys.size() || (i < xs.size() && xs[i] < ys[j])) {
      min_x_minus_y = std::min<std::uint64_t>(min_x_minus_y, xs[i]);
      ++i;
    } else if (i == xs.size() || ys[j] < xs[i]) {
      min_y_minus_x = std::min<std::uint64_t>(min_y_minus_x, ys[j]);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  if (min_y_minus_x == kInf && min_x_minus_y == kInf) return std::strong_ordering::equal;
  return min_y_minus_x <= min_x_minus_y ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
}

NatChain drop_max(const NatChain& x) {
  if (x.empty()) throw InputError("empty chain has no maximum");
  std::vector<std::uint32_t> v = x.values();
  v.pop_back();
  return NatChain(std::move(v));
}

NatChain extend(const NatChain& x, std::uint32_t n) {
  if (!x.empty() && n <= x.max()) throw InputError("not extending the maximum");
  std::vector<std::uint32_t> v = x.values();
  v.push_back(n);
  return NatChain(std::move(v));
}

std::string to_string(const NatChain& x) {
  if (x.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.values()[i]);
  }
  return out;
}

NatChain parse_chain(std::string_view literal) {
  if (literal == "-") return NatChain();
  if (literal.empty()) throw InputError("empty chain literal (use '-')");
  std::vector<std::uint32_t> values;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    std::string_view tok = literal.substr(pos, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - pos);
    if (tok.empty()) throw InputError("malformed chain literal: empty component");
    std::uint64_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw InputError("malformed chain literal: expected digits");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw InputError("chain element out of range");
    }
    values.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == literal.size()) throw InputError("malformed chain literal: trailing comma");
  }
  return NatChain(std::move(values));  // validates ascending/positive
}

std::strong_ordering DyadicValue::operator<=>(const DyadicValue& other) const {
  // Align to the larger exponent. num < 2^log2_den always holds for values
  // in [0,1), so the shifted numerators stay within 128 bits.
  int k = std::max(log2_den, other.log2_den);
  unsigned __int128 a = num << (k - log2_den);
  unsigned __int128 b = other.num << (k - other.log2_den);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicValue dyadic_value(const NatChain& x) {
  if (x.empty()) return DyadicValue{};
  std::uint32_t k = x.max();
  if (k > 127) throw OverflowError("dyadic value overflow: element exceeds 127");
  unsigned __int128 num = 0;
  for (std::uint32_t v : x.values()) num += static_cast<unsigned __int128>(1) << (k - v);
  // max element contributes 2^0, so num is odd and the form is canonical
  return DyadicValue{num, static_cast<int>(k)};
}

namespace {

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits += static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace

std::string to_string(const DyadicValue& v) {
  if (v.num == 0) return "0";
  unsigned __int128 den = static_cast<unsigned __int128>(1) << v.log2_den;
  return u128_to_string(v.num) + "/" + u128_to_string(den);
}

}  // namespace grm
