#include "grm/measured_poset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "grm/errors.hpp"

namespace grm {

MeasuredPoset MeasuredPoset::from_relations(
    std::vector<std::string> names, std::vector<std::uint32_t> lengths,
    const std::vector<std::pair<std::size_t, std::size_t>>& below) {
  if (names.size() != lengths.size())
    throw InputError("element and length counts differ");
  MeasuredPoset p;
  p.names_ = std::move(names);
  p.lengths_ = std::move(lengths);
  const std::size_t n = p.names_.size();
  p.below_.assign(n * n, 0);
  for (const auto& [a, b] : below) {
    if (a >= n || b >= n) throw InputError("relation index out of range");
    p.below_[a * n + b] = 1;
  }
  // Floyd-Warshall closure; n stays at desk scale.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.below_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.below_[k * n + j]) p.below_[i * n + j] = 1;
    }
  return p;
}

std::optional<std::size_t> MeasuredPoset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> MeasuredPoset::predecessors(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (below(i, x)) out.push_back(i);
  return out;
}

std::vector<std::size_t> MeasuredPoset::successors(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (below(x, i)) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> MeasuredPoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!below(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z)
        if (below(x, z) && below(z, y)) covered = false;
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::size_t> MeasuredPoset::topological_order() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths_[a] < lengths_[b]; });
  return order;
}

MeasuredPoset MeasuredPoset::restrict_max_length(std::uint32_t max_length) const {
  std::vector<std::string> names;
  std::vector<std::uint32_t> lengths;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (lengths_[i] <= max_length) {
      keep.push_back(i);
      names.push_back(names_[i]);
      lengths.push_back(lengths_[i]);
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (below(keep[a], keep[b])) pairs.emplace_back(a, b);
  return from_relations(std::move(names), std::move(lengths), pairs);
}

std::optional<PosetViolation> validate(const MeasuredPoset& poset) {
  const std::size_t n = poset.size();
  for (std::size_t i = 0; i < n; ++i)
    if (poset.length(i) < 1)
      return PosetViolation{"length", poset.name(i), poset.name(i),
                            "length of '" + poset.name(i) + "' is not positive"};
  for (std::size_t i = 0; i < n; ++i)
    if (poset.below(i, i))
      return PosetViolation{"cycle", poset.name(i), poset.name(i),
                            "'" + poset.name(i) + "' lies on a directed cycle"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.below(i, j) && poset.length(i) >= poset.length(j))
        return PosetViolation{
            "monotonicity", poset.name(i), poset.name(j),
            "'" + poset.name(i) + "' < '" + poset.name(j) +
                "' but lengths are " + std::to_string(poset.length(i)) + " and " +
                std::to_string(poset.length(j))};
  return std::nullopt;
}

MeasuredPoset load_poset(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::uint32_t> lengths;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    auto fail = [&](const std::string& msg) {
      throw InputError("poset file line " + std::to_string(lineno) + ": " + msg);
    };
    if (directive == "e") {
      std::string name;
      long long length = 0;
      if (!(ls >> name >> length)) fail("expected 'e <name> <length>'");
      if (length < 1) fail("length must be a positive integer");
      if (index.contains(name)) fail("duplicate element '" + name + "'");
      index.emplace(name, names.size());
      names.push_back(name);
      lengths.push_back(static_cast<std::uint32_t>(length));
    } else if (directive == "r") {
      std::string a, b;
      if (!(ls >> a >> b)) fail("expected 'r <name1> <name2>'");
      auto ia = index.find(a);
      auto ib = index.find(b);
      if (ia == index.end()) fail("unknown element '" + a + "'");
      if (ib == index.end()) fail("unknown element '" + b + "'");
      if (ia->second == ib->second) fail("element related to itself");
      pairs.emplace_back(ia->second, ib->second);
    } else {
      fail("unknown directive '" + directive + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  return MeasuredPoset::from_relations(std::move(names), std::move(lengths), pairs);
}

MeasuredPoset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open poset file '" + path + "'");
  return load_poset(in);
}

}  // namespace grm
