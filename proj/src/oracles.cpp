#include "exprim/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "exprim/error.hpp"

namespace exprim::oracles {

namespace {

bool connected(const std::vector<std::vector<std::uint32_t>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == adj.size();
}

}  // namespace

bool primitive_by_orbital_graphs(const Perms& gens, std::size_t n) {
  if (n > 60) throw DomainError("orbital-graph oracle is limited to 60 points");
  if (n <= 2) return true;
  // label ordered pairs by orbital
  std::vector<int> orbital(n * n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (orbital[start] >= 0 || start / n == start % n) continue;
    std::vector<std::size_t> queue{start};
    orbital[start] = next;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t x = queue[h] / n, y = queue[h] % n;
      for (const auto& p : gens) {
        const std::size_t img = p[x] * n + p[y];
        if (orbital[img] < 0) {
          orbital[img] = next;
          queue.push_back(img);
        }
      }
    }
    ++next;
  }
  for (int o = 0; o < next; ++o) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (orbital[x * n + y] == o) {
          adj[x].push_back(static_cast<std::uint32_t>(y));
          adj[y].push_back(static_cast<std::uint32_t>(x));
        }
      }
    }
    if (!connected(adj)) return false;
  }
  return true;
}

bool primitive_by_block_enumeration(const Perms& gens, std::size_t n) {
  if (n > 16) throw DomainError("block enumeration oracle is limited to 16 points");
  using Set = std::uint32_t;
  auto image = [&](const std::vector<std::uint32_t>& p, Set s) {
    Set out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1U) out |= Set{1} << p[i];
    }
    return out;
  };
  for (Set b = 1; b < (Set{1} << n); b += 2) {  // subsets containing point 0
    const auto k = static_cast<std::size_t>(std::popcount(b));
    if (k <= 1 || k >= n || n % k != 0) continue;
    std::vector<Set> orbit{b};
    std::set<Set> seen{b};
    bool block = true;
    for (std::size_t h = 0; h < orbit.size() && block; ++h) {
      for (const auto& p : gens) {
        const Set img = image(p, orbit[h]);
        if (seen.insert(img).second) orbit.push_back(img);
      }
    }
    for (std::size_t i = 0; i < orbit.size() && block; ++i) {
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        if ((orbit[i] & orbit[j]) != 0) {
          block = false;
          break;
        }
      }
    }
    if (block) return false;
  }
  return true;
}

bool is_two_transitive(const Perms& gens, std::size_t n) {
  if (n > 2048) throw DomainError("two-transitivity oracle is limited to 2048 points");
  if (n <= 1) return true;
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> queue{1};
  seen[1] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t x = queue[h] / n, y = queue[h] % n;
    for (const auto& p : gens) {
      const std::size_t img = p[x] * n + p[y];
      if (!seen[img]) {
        seen[img] = true;
        queue.push_back(img);
      }
    }
  }
  return queue.size() == n * (n - 1);
}

std::uint64_t weyl_orbit_bruteforce(const weyl::Weight& w) {
  const std::size_t ell = w.ell();
  if (ell == 0 || ell > 8) throw DomainError("brute-force Weyl orbits are limited to ell <= 8");
  std::vector<int> a(ell + 1, 0);
  for (std::size_t j = ell; j-- > 0;) a[j] = a[j + 1] + w.coeffs[j];
  std::vector<std::size_t> perm(ell + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> orbit;
  do {
    std::vector<int> v(ell + 1);
    for (std::size_t j = 0; j <= ell; ++j) v[perm[j]] = a[j];
    orbit.insert(std::move(v));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit.size();
}

}  // namespace exprim::oracles
