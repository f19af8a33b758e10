#include "exprim/action.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "exprim/error.hpp"

namespace exprim::action {

using gf2::ActionTable;
using gf2::Word;
using groups::MatrixGroup;

unsigned default_threads() {
  if (const char* env = std::getenv("EXPRIM_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string to_string(EPReason r) {
  switch (r) {
    case EPReason::not_irreducible:
      return "not-irreducible";
    case EPReason::imprimitive_orbit:
      return "imprimitive-orbit";
    case EPReason::all_orbits_primitive:
      return "all-orbits-primitive";
  }
  return "?";
}

namespace {

std::vector<ActionTable> tables(const MatrixGroup& g) {
  std::vector<ActionTable> out;
  for (const auto& m : g.generators()) out.emplace_back(m);
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns false when already joined.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

std::vector<std::vector<std::uint32_t>> orbit_action(const MatrixGroup& g, std::span<const Word> orbit) {
  const auto acts = tables(g);
  std::vector<std::vector<std::uint32_t>> perms(acts.size(), std::vector<std::uint32_t>(orbit.size()));
  for (std::size_t s = 0; s < acts.size(); ++s) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const Word img = acts[s].apply(orbit[i]);
      const auto it = std::lower_bound(orbit.begin(), orbit.end(), img);
      if (it == orbit.end() || *it != img) throw DomainError("point set is not closed under the group");
      perms[s][i] = static_cast<std::uint32_t>(it - orbit.begin());
    }
  }
  return perms;
}

namespace {

/// Finest congruence joining 0 and b; returns the union-find when it is not universal.
std::optional<UnionFind> congruence(const std::vector<std::vector<std::uint32_t>>& perms, std::size_t n,
                                    std::uint32_t b) {
  UnionFind uf(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, b}};
  uf.unite(0, b);
  std::size_t classes = n - 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (const auto& p : perms) {
      if (uf.unite(p[x], p[y])) {
        queue.emplace_back(p[x], p[y]);
        if (--classes == 1) return std::nullopt;
      }
    }
  }
  return uf;
}

}  // namespace

std::vector<Word> OrbitDecomposition::members(std::size_t label) const {
  std::vector<Word> out;
  out.reserve(sizes.at(label));
  for (std::size_t v = 1; v < orbit_of.size(); ++v) {
    if (orbit_of[v] == label) out.push_back(v);
  }
  return out;
}

OrbitDecomposition orbits_on_nonzero(const MatrixGroup& g) {
  const std::size_t d = g.dim();
  if (d == 0 || d > kMaxOrbitDim) {
    throw ResourceError("orbit enumeration supports dimensions 1.." + std::to_string(kMaxOrbitDim));
  }
  const auto acts = tables(g);
  const std::size_t n = std::size_t{1} << d;
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  OrbitDecomposition out;
  out.dim = d;
  out.orbit_of.assign(n, kUnseen);
  std::vector<Word> queue;
  for (Word v = 1; v < n; ++v) {
    if (out.orbit_of[v] != kUnseen) continue;
    const auto label = static_cast<std::uint32_t>(out.sizes.size());
    out.orbit_of[v] = label;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& a : acts) {
        const Word w = a.apply(queue[head]);
        if (out.orbit_of[w] == kUnseen) {
          out.orbit_of[w] = label;
          queue.push_back(w);
        }
      }
    }
    out.sizes.push_back(queue.size());
    out.representatives.push_back(v);
  }
  out.orbit_of[0] = 0;
  return out;
}

PrimitivityResult is_primitive_on_orbit(const MatrixGroup& g, std::span<const Word> orbit, unsigned threads) {
  const std::size_t n = orbit.size();
  if (n == 0) throw DomainError("empty orbit");
  if (n <= 3 || groups::is_prime(n)) return {};
  if (n > kMaxPrimitivityPoints) {
    throw ResourceError("primitivity on " + std::to_string(n) + " points is beyond the supported " +
                        std::to_string(kMaxPrimitivityPoints));
  }
  const auto perms = orbit_action(g, orbit);
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n - 1));

  // Smallest b with a nontrivial congruence; every smaller b is checked by
  // some worker, so the answer does not depend on scheduling.
  std::atomic<std::size_t> best{n};
  auto work = [&](unsigned t) {
    for (std::size_t b = 1 + t; b < n; b += threads) {
      if (b >= best.load(std::memory_order_relaxed)) return;
      if (congruence(perms, n, static_cast<std::uint32_t>(b))) {
        std::size_t cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
        return;
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  if (best.load() == n) return {};

  auto uf = *congruence(perms, n, static_cast<std::uint32_t>(best.load()));
  PrimitivityResult r;
  r.primitive = false;
  const auto root = uf.find(0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (uf.find(i) == root) r.block.push_back(orbit[i]);
  }
  return r;
}

EPVerdict is_extremely_primitive(const MatrixGroup& g, const EPOptions& options) {
  if (g.dim() == 0) throw DomainError("the zero module is not a valid input");
  EPVerdict v;
  const auto irr = modules::is_irreducible(g.generators(), options.meataxe);
  v.irreducibility_method = irr.method;
  if (!irr.irreducible) {
    v.reason = EPReason::not_irreducible;
    return v;
  }
  const auto orbits = orbits_on_nonzero(g);
  v.orbit_count = orbits.count();
  for (std::size_t label = 0; label < orbits.count(); ++label) {
    OrbitReport rep;
    rep.label = label;
    rep.size = orbits.sizes[label];
    rep.representative = orbits.representatives[label];
    if (g.order()) rep.stabiliser_order = *g.order() / groups::BigInt(static_cast<unsigned long>(rep.size));
    const auto members = orbits.members(label);
    const auto prim = is_primitive_on_orbit(g, members, options.threads);
    rep.primitive = prim.primitive;
    rep.block_size = prim.block.size();
    v.per_orbit.push_back(rep);
    if (!prim.primitive) {
      v.reason = EPReason::imprimitive_orbit;
      v.failing_orbit = label;
      return v;
    }
  }
  v.is_ep = true;
  v.reason = EPReason::all_orbits_primitive;
  return v;
}

}  // namespace exprim::action
