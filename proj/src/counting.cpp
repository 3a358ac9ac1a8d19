#include "setorbits/counting.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace setorbits {
namespace {

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull);
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

// Mixed-radix code for cycle types: digit for length L is the number of
// L-cycles, which is at most n / L.
struct CycleTypeCodec {
  std::size_t degree;
  std::vector<Key> weight;  // weight[L], L = 1..n
  std::vector<Key> radix;

  explicit CycleTypeCodec(std::size_t n) : degree(n), weight(n + 2, 0), radix(n + 2, 0) {
    Key w = 1;
    for (std::size_t len = 1; len <= n; ++len) {
      weight[len] = w;
      radix[len] = n / len + 1;
      if (w > ~Key{0} / radix[len]) {
        throw std::invalid_argument("cycle_index: degree " + std::to_string(n) + " too large");
      }
      w *= radix[len];
    }
  }

  CycleType decode(Key key) const {
    CycleType type;
    for (std::size_t len = degree; len >= 1; --len) {
      auto count = static_cast<int>((key / weight[len]) % radix[len]);
      type.parts.insert(type.parts.end(), count, static_cast<int>(len));
    }
    return type;
  }
};

using Census = std::unordered_map<Key, std::uint64_t, KeyHash>;

void census_branch(const StrongGenSet& group, const CycleTypeCodec& codec, std::size_t branch,
                   Census& census) {
  const std::size_t n = group.degree();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const Key* weight = codec.weight.data();
  // Consecutive elements often share a type; count runs before touching the map.
  Key last_key = 0;
  std::uint64_t run = 0;
  group.for_each_element_in_branch(branch, [&](std::span<const Point> images) {
    const Point* img = images.data();
    std::uint64_t unseen = all;
    Key key = 0;
    while (unseen) {
      const int start = std::countr_zero(unseen);
      int j = start;
      int length = 0;
      do {
        unseen &= ~(std::uint64_t{1} << j);
        j = img[j];
        ++length;
      } while (j != start);
      key += weight[length];
    }
    if (key == last_key) {
      ++run;
    } else {
      if (run) census[last_key] += run;
      last_key = key;
      run = 1;
    }
  });
  if (run) census[last_key] += run;
}

}  // namespace

void CycleIndex::validate() const {
  BigCount total = 0;
  for (const auto& [type, count] : terms) {
    if (type.degree() != static_cast<int>(degree)) {
      throw InconsistencyError("cycle index: type " + type.str() + " does not sum to degree " +
                               std::to_string(degree));
    }
    total += count;
  }
  if (total != group_order) {
    throw InconsistencyError("cycle index: counts sum to " + total.get_str() +
                             ", group order is " + group_order.get_str());
  }
}

PartitionRecord PartitionRecord::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  PartitionRecord out;
  out.block_count = static_cast<int>(parts.size());
  out.symmetry_factor = 1;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out.symmetry_factor *= factorial(j - i);
    i = j;
  }
  out.parts = std::move(parts);
  return out;
}

int PartitionRecord::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string PartitionRecord::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

CycleIndex cycle_index(const StrongGenSet& group, unsigned workers, const ProgressFn& progress) {
  const std::size_t n = group.degree();
  if (n > 64) throw std::invalid_argument("cycle_index supports degree <= 64");
  const CycleTypeCodec codec(n);
  const std::size_t branches = group.top_branch_count();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(branches)));

  std::vector<Census> partial(workers);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto work = [&](unsigned id) {
    for (std::size_t b = next++; b < branches; b = next++) {
      census_branch(group, codec, b, partial[id]);
      const std::size_t finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, branches);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  std::map<Key, std::uint64_t> merged;
  for (const auto& census : partial) {
    for (const auto& [key, count] : census) merged[key] += count;
  }
  CycleIndex out;
  out.degree = n;
  out.group_order = group.order();
  for (const auto& [key, count] : merged) {
    out.terms[codec.decode(key)] = BigCount(static_cast<unsigned long>(count));
  }
  out.validate();
  return out;
}

SetOrbitCount set_orbit_count(const CycleIndex& ci) {
  BigCount sum = 0;
  for (const auto& [type, count] : ci.terms) sum += count * pow2(type.cycle_count());
  SetOrbitCount out;
  out.value = exact_div(sum, ci.group_order, "set-orbit Burnside sum");
  out.group_order = ci.group_order;
  out.degree = ci.degree;
  return out;
}

BigCount fixed_arrangements(const CycleType& type, const PartitionRecord& partition) {
  if (type.degree() != partition.total()) {
    throw std::invalid_argument("partition " + partition.str() + " does not sum to degree " +
                                std::to_string(type.degree()));
  }
  const auto& cycles = type.parts;
  // The count is symmetric in the capacities, so memoise on the sorted vector.
  std::vector<std::map<std::vector<int>, BigCount>> memo(cycles.size() + 1);
  std::function<BigCount(std::size_t, std::vector<int>)> count =
      [&](std::size_t index, std::vector<int> caps) -> BigCount {
    std::sort(caps.begin(), caps.end(), std::greater<>());
    while (!caps.empty() && caps.back() == 0) caps.pop_back();
    if (index == cycles.size()) return caps.empty() ? 1 : 0;
    if (auto it = memo[index].find(caps); it != memo[index].end()) return it->second;
    BigCount total = 0;
    for (std::size_t c = 0; c < caps.size(); ++c) {
      if (caps[c] < cycles[index]) continue;
      auto next = caps;
      next[c] -= cycles[index];
      total += count(index + 1, std::move(next));
    }
    memo[index].emplace(caps, total);
    return total;
  };
  return count(0, partition.parts);
}

BigCount multiset_orbit_count(const CycleIndex& ci, const PartitionRecord& partition) {
  if (partition.total() != static_cast<int>(ci.degree)) {
    throw std::invalid_argument("partition " + partition.str() + " does not sum to degree " +
                                std::to_string(ci.degree));
  }
  BigCount sum = 0;
  for (const auto& [type, count] : ci.terms) sum += count * fixed_arrangements(type, partition);
  return exact_div(sum, ci.group_order, "multiset Burnside sum for " + partition.str());
}

std::vector<PartitionRecord> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
  std::vector<PartitionRecord> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(PartitionRecord::from_parts(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

BigCount brute_force_set_orbits(const StrongGenSet& group, const BruteForceBudget& budget) {
  const std::size_t n = group.degree();
  if (n > budget.max_degree_sets || n > 30) {
    throw BudgetError("brute_force_set_orbits: degree " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_degree_sets));
  }
  if (group.order() > budget.max_order_sets) {
    throw BudgetError("brute_force_set_orbits: order " + group.order().get_str() +
                      " exceeds budget " + budget.max_order_sets.get_str());
  }
  // Image of a mask via per-byte lookup tables, one set per generator.
  const std::size_t chunks = (n + 7) / 8;
  std::vector<std::vector<std::array<std::uint32_t, 256>>> tables;
  for (const auto& g : group.strong_generators()) {
    std::vector<std::array<std::uint32_t, 256>> table(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      for (unsigned byte = 0; byte < 256; ++byte) {
        std::uint32_t image = 0;
        for (unsigned bit = 0; bit < 8; ++bit) {
          const std::size_t point = c * 8 + bit;
          if ((byte >> bit & 1u) && point < n) image |= std::uint32_t{1} << g[point];
        }
        table[c][byte] = image;
      }
    }
    tables.push_back(std::move(table));
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<bool> marked(subsets, false);
  std::vector<std::uint32_t> queue;
  BigCount orbits = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (marked[mask]) continue;
    ++orbits;
    marked[mask] = true;
    queue.assign(1, static_cast<std::uint32_t>(mask));
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::uint32_t m = queue[k];
      for (const auto& table : tables) {
        std::uint32_t image = 0;
        for (std::size_t c = 0; c < chunks; ++c) image |= table[c][(m >> (8 * c)) & 0xFFu];
        if (!marked[image]) {
          marked[image] = true;
          queue.push_back(image);
        }
      }
    }
  }
  return orbits;
}

BigCount brute_force_multiset_orbits(const StrongGenSet& group, const PartitionRecord& partition,
                                     const BruteForceBudget& budget) {
  const std::size_t n = group.degree();
  if (partition.total() != static_cast<int>(n)) {
    throw std::invalid_argument("partition " + partition.str() + " does not sum to degree " +
                                std::to_string(n));
  }
  if (n > budget.max_degree_arrangements || n > 20) {
    throw BudgetError("brute_force_multiset_orbits: degree " + std::to_string(n) +
                      " exceeds budget " + std::to_string(budget.max_degree_arrangements));
  }
  BigCount total_big = factorial(n);
  for (int p : partition.parts) total_big /= factorial(static_cast<unsigned long>(p));
  if (total_big > budget.max_arrangements) {
    throw BudgetError("brute_force_multiset_orbits: " + total_big.get_str() +
                      " arrangements exceed budget " + budget.max_arrangements.get_str());
  }
  const auto total = static_cast<std::uint64_t>(total_big.get_ui());
  const int colours = partition.block_count;

  // Dense rank of a word: colour c's positions, indexed among the positions not
  // taken by smaller colours, form a combination ranked in colex order; the
  // per-colour ranks are digits of a mixed-radix number.
  std::array<std::array<std::uint64_t, 21>, 21> binom{};
  for (std::size_t i = 0; i <= 20; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  std::array<std::uint64_t, 21> stride{};
  std::array<std::uint64_t, 21> radix{};
  std::size_t free_positions = n;
  for (int c = 0; c < colours; ++c) {
    radix[c] = binom[free_positions][partition.parts[c]];
    stride[c] = c == 0 ? 1 : stride[c - 1] * radix[c - 1];
    free_positions -= partition.parts[c];
  }
  auto rank = [&](const std::uint8_t* word) {
    std::array<std::uint32_t, 21> mask{};
    for (std::size_t i = 0; i < n; ++i) mask[word[i]] |= std::uint32_t{1} << i;
    std::uint32_t free_mask = (std::uint32_t{1} << n) - 1;
    std::uint64_t r = 0;
    for (int c = 0; c + 1 < colours; ++c) {
      std::uint64_t digit = 0;
      int j = 0;
      for (std::uint32_t m = mask[c]; m != 0; m &= m - 1) {
        const std::uint32_t below = (m & -m) - 1;
        digit += binom[std::popcount(free_mask & below)][++j];
      }
      r += stride[c] * digit;
      free_mask &= ~mask[c];
    }
    return r;
  };
  auto unrank = [&](std::uint64_t r, std::uint8_t* word) {
    std::array<std::size_t, 21> slots;  // free positions, increasing
    std::size_t free_count = n;
    for (std::size_t i = 0; i < n; ++i) slots[i] = i;
    for (int c = 0; c < colours; ++c) {
      std::uint64_t digit = r % radix[c];
      r /= radix[c];
      std::array<bool, 21> taken{};
      for (int j = partition.parts[c]; j >= 1; --j) {
        std::size_t x = j - 1;
        while (binom[x + 1][j] <= digit) ++x;
        digit -= binom[x][j];
        taken[x] = true;
        word[slots[x]] = static_cast<std::uint8_t>(c);
      }
      std::size_t kept = 0;
      for (std::size_t x = 0; x < free_count; ++x) {
        if (!taken[x]) slots[kept++] = slots[x];
      }
      free_count = kept;
    }
  };

  std::vector<bool> marked(total, false);
  std::vector<std::uint8_t> queue;  // words of the current orbit, n bytes each
  std::vector<std::uint8_t> image(n);
  const auto& generators = group.generators().empty() ? group.strong_generators() : group.generators();
  BigCount orbits = 0;
  std::uint64_t visited = 0;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (marked[r]) continue;
    ++orbits;
    marked[r] = true;
    queue.resize(n);
    unrank(r, queue.data());
    if (rank(queue.data()) != r) throw InconsistencyError("brute_force_multiset_orbits: rank mismatch");
    for (std::size_t k = 0; k < queue.size(); k += n) {
      for (const auto& g : generators) {
        for (std::size_t i = 0; i < n; ++i) image[g[i]] = queue[k + i];
        const std::uint64_t ir = rank(image.data());
        if (!marked[ir]) {
          marked[ir] = true;
          queue.insert(queue.end(), image.begin(), image.end());
        }
      }
    }
    visited += queue.size() / n;
  }
  if (visited != total) throw InconsistencyError("brute_force_multiset_orbits: word count mismatch");
  return orbits;
}

}  // namespace setorbits
