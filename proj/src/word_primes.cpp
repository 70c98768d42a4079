#include "periodeq/word_primes.hpp"

#include <mutex>
#include <vector>

#include "periodeq/number_theory.hpp"

namespace periodeq {

namespace {

constexpr std::uint64_t kTop = std::uint64_t{1} << 62;

struct DescendingTable {
  std::mutex mutex;
  std::vector<std::uint64_t> primes;
};

DescendingTable& descending_table() {
  static DescendingTable table;
  return table;
}

}  // namespace

std::uint64_t descending_word_prime(std::size_t index) {
  auto& table = descending_table();
  std::lock_guard<std::mutex> lock(table.mutex);
  auto& primes = table.primes;
  if (index < primes.size()) return primes[index];
  std::uint64_t candidate = primes.empty() ? kTop - 1 : primes.back() - 2;
  if (primes.empty() && candidate % 2 == 0) --candidate;
  while (primes.size() <= index) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

std::vector<std::uint64_t> primes_congruent_one(std::uint64_t p,
                                                std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  // For odd p keep k even so that q = k*p + 1 is odd.
  const std::uint64_t step = p % 2 == 1 ? 2 : 1;
  std::uint64_t k = kTop / p + 1;
  if (step == 2 && k % 2 == 1) ++k;
  for (; out.size() < count; k += step) {
    const std::uint64_t q = k * p + 1;
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

}  // namespace periodeq
