#include "grm/random_poset.hpp"

#include <random>
#include <string>

#include "grm/errors.hpp"

namespace grm {

namespace {

// mt19937_64 output is pinned by the standard; std::uniform_int_distribution
// is not, so bounded draws go through a plain modulo.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t next(std::uint64_t bound) { return gen() % bound; }
};

}  // namespace

MeasuredPoset random_poset(std::uint64_t seed, std::size_t size, std::uint32_t max_length) {
  if (size < 1) throw InputError("poset size must be at least 1");
  if (max_length < 1) throw InputError("max_length must be at least 1");
  Rng rng(seed);

  std::size_t width = std::to_string(size - 1).size();
  std::vector<std::string> names;
  std::vector<std::uint32_t> lengths;
  for (std::size_t i = 0; i < size; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("e" + std::string(width - digits.size(), '0') + digits);
    lengths.push_back(1 + static_cast<std::uint32_t>(rng.next(max_length)));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (lengths[i] >= lengths[j]) continue;
      if (rng.next(100) < 40) pairs.emplace_back(i, j);
    }
  return MeasuredPoset::from_relations(std::move(names), std::move(lengths), pairs);
}

}  // namespace grm
