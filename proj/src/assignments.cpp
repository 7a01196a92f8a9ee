#include "kempe/assignments.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "kempe/errors.hpp"

namespace kempe {
namespace {

using Perm = std::vector<std::uint8_t>;  // perm[c] for c in 1..cap, index 0 unused

const std::vector<Perm>& permutations(int cap) {
  static std::vector<std::vector<Perm>> cache(kMaxCap + 1);
  static std::once_flag flags[kMaxCap + 1];
  std::call_once(flags[cap], [cap] {
    Perm p(cap + 1);
    std::iota(p.begin(), p.end(), 0);
    do {
      cache[cap].push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
  });
  return cache[cap];
}

std::uint64_t apply(const Perm& p, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    int c = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << p[c];
  }
  return out;
}

// -1 if a < b, 0 if equal, 1 if a > b (equal-size sets by sorted sequence).
int compare(std::uint64_t a, std::uint64_t b) {
  if (a == b) return 0;
  std::uint64_t low = (a ^ b) & -(a ^ b);
  return (a & low) ? -1 : 1;
}

void check_space(const std::vector<int>& sizes, int cap) {
  if (cap < 1 || cap > kMaxCap)
    throw ParameterError("color cap must lie in [1, " + std::to_string(kMaxCap) + "]");
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 1)
      throw ParameterError("list size at vertex " + std::to_string(v) + " must be >= 1");
    if (sizes[v] > cap)
      throw ParameterError("cap " + std::to_string(cap) + " is smaller than the list size " +
                           std::to_string(sizes[v]) + " at vertex " + std::to_string(v));
  }
}

std::uint64_t range_mask(int lo, int hi) {  // colors lo..hi inclusive
  std::uint64_t m = 0;
  for (int c = lo; c <= hi; ++c) m |= std::uint64_t{1} << c;
  return m;
}

// Calls f with every size-k subset of the colors in `from`, increasing by
// sorted sequence.
template <class F>
bool for_each_subset(std::uint64_t from, int k, F&& f) {
  std::vector<int> items;
  for (std::uint64_t m = from; m; m &= m - 1) items.push_back(std::countr_zero(m));
  const int n = static_cast<int>(items.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t s = 0;
    for (int i : idx) s |= std::uint64_t{1} << items[i];
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::uint64_t> masks_of(const ListAssignment& lists, int cap) {
  std::vector<std::uint64_t> out;
  for (const auto& s : lists.lists()) {
    if (s.mask() & ~range_mask(1, cap))
      throw ParameterError("list uses a color outside 1.." + std::to_string(cap));
    out.push_back(s.mask());
  }
  return out;
}

ListAssignment from_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<ColorSet> lists;
  for (auto m : masks) lists.push_back(ColorSet::from_mask(m));
  return ListAssignment(std::move(lists));
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

void for_each_canonical(const std::vector<int>& sizes, int cap,
                        const std::function<bool(const ListAssignment&)>& visit) {
  check_space(sizes, cap);
  const int n = static_cast<int>(sizes.size());
  const auto& perms = permutations(cap);
  std::vector<std::uint64_t> cur(n, 0);
  bool stop = false;

  // `alive` holds the permutations that map the prefix onto itself; any
  // permutation that maps it lower proves the prefix non-canonical.
  std::function<void(int, int, const std::vector<std::uint32_t>&)> rec =
      [&](int i, int used, const std::vector<std::uint32_t>& alive) {
        if (i == n) {
          if (!visit(from_masks(cur))) stop = true;
          return;
        }
        const int s = sizes[i];
        for (int k = 0; k <= std::min(s, cap - used) && !stop; ++k) {
          if (s - k > used) continue;
          std::uint64_t fresh = range_mask(used + 1, used + k);
          for_each_subset(range_mask(1, used), s - k, [&](std::uint64_t old) {
            cur[i] = old | fresh;
            std::vector<std::uint32_t> next;
            bool lower = false;
            for (auto p : alive) {
              int c = compare(apply(perms[p], cur[i]), cur[i]);
              if (c < 0) {
                lower = true;
                break;
              }
              if (c == 0) next.push_back(p);
            }
            if (!lower) rec(i + 1, used + k, next);
            return !stop;
          });
        }
        cur[i] = 0;
      };
  std::vector<std::uint32_t> all(perms.size());
  std::iota(all.begin(), all.end(), 0);
  rec(0, 0, all);
}

std::size_t count_canonical(const std::vector<int>& sizes, int cap) {
  std::size_t count = 0;
  for_each_canonical(sizes, cap, [&](const ListAssignment&) {
    ++count;
    return true;
  });
  return count;
}

ListAssignment canonicalize(const ListAssignment& lists, int cap) {
  auto masks = masks_of(lists, cap);
  std::vector<int> sizes;
  for (auto m : masks) sizes.push_back(std::popcount(m));
  check_space(sizes, cap);
  auto best = masks;
  std::vector<std::uint64_t> img(masks.size());
  for (const auto& p : permutations(cap)) {
    for (std::size_t v = 0; v < masks.size(); ++v) img[v] = apply(p, masks[v]);
    for (std::size_t v = 0; v < masks.size(); ++v) {
      int c = compare(img[v], best[v]);
      if (c < 0) {
        best = img;
        break;
      }
      if (c > 0) break;
    }
  }
  return from_masks(best);
}

bool is_canonical(const ListAssignment& lists, int cap) { return canonicalize(lists, cap) == lists; }

std::size_t stabilizer_size(const ListAssignment& lists, int cap) {
  auto masks = masks_of(lists, cap);
  std::size_t count = 0;
  for (const auto& p : permutations(cap)) {
    bool fixed = true;
    for (auto m : masks)
      if (apply(p, m) != m) {
        fixed = false;
        break;
      }
    count += fixed;
  }
  return count;
}

AssignmentSampler::AssignmentSampler(std::vector<int> sizes, int cap, std::uint64_t seed)
    : sizes_(std::move(sizes)), cap_(cap), rng_(seed) {
  check_space(sizes_, cap_);
  const int n = static_cast<int>(sizes_.size());
  completions_.assign(n + 1, std::vector<std::uint64_t>(cap_ + 1, 0));
  for (int m = 0; m <= cap_; ++m) completions_[n][m] = 1;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (int i = n - 1; i >= 0; --i)
    for (int m = 0; m <= cap_; ++m) {
      unsigned __int128 total = 0;
      for (int k = 0; k <= std::min(sizes_[i], cap_ - m); ++k)
        total += static_cast<unsigned __int128>(binomial(m, sizes_[i] - k)) *
                 completions_[i + 1][m + k];
      if (total > kLimit) throw ParameterError("assignment space too large to sample");
      completions_[i][m] = static_cast<std::uint64_t>(total);
    }
}

ListAssignment AssignmentSampler::next() {
  const int n = static_cast<int>(sizes_.size());
  std::vector<std::uint64_t> masks(n);
  while (true) {
    ++draws_;
    int used = 0;
    std::uint64_t weight = 1;
    for (int i = 0; i < n; ++i) {
      const int s = sizes_[i];
      std::uniform_int_distribution<std::uint64_t> pick(0, completions_[i][used] - 1);
      std::uint64_t r = pick(rng_);
      int k = 0;
      for (;; ++k) {
        std::uint64_t w = binomial(used, s - k) * completions_[i + 1][used + k];
        if (r < w) break;
        r -= w;
      }
      // Uniform (s-k)-subset of the used colors by Floyd's method.
      std::uint64_t old = 0;
      const int need = s - k;
      for (int j = used - need + 1; j <= used; ++j) {
        std::uniform_int_distribution<int> d(1, j);
        int t = d(rng_);
        std::uint64_t bit = std::uint64_t{1} << t;
        old |= (old & bit) ? (std::uint64_t{1} << j) : bit;
      }
      masks[i] = old | range_mask(used + 1, used + k);
      weight *= factorial(k);
      used += k;
    }
    weight *= factorial(cap_ - used);
    auto lists = from_masks(masks);
    std::uint64_t stab = stabilizer_size(lists, cap_);
    std::uniform_int_distribution<std::uint64_t> accept(0, weight - 1);
    if (accept(rng_) < stab) return canonicalize(lists, cap_);
  }
}

std::vector<int> degree_sizes(const Graph& g) {
  std::vector<int> sizes(g.order());
  for (Vertex v = 0; v < g.order(); ++v) sizes[v] = g.degree(v);
  return sizes;
}

}  // namespace kempe
