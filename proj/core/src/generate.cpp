#include "copwin/generate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "copwin/canon.hpp"

namespace copwin {

namespace {

bool connected_without(const Graph& g, int x) {
  const uint32_t all = g.vertices().bits() & ~(uint32_t{1} << x);
  if (!all) return true;
  uint32_t seen = all & (~all + 1);
  uint32_t frontier = seen;
  while (frontier) {
    uint32_t next = 0;
    for (uint32_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

// Cheap isomorphism-invariant vertex key; smaller keys are preferred as
// deletion vertices: degree, then the sum of neighbour degrees, then the
// number of triangles through the vertex.
uint32_t vertex_key(const Graph& g, int x) {
  uint32_t nsum = 0, tri = 0;
  const uint32_t nx = g.row(x);
  for (uint32_t r = nx; r; r &= r - 1) {
    const int y = std::countr_zero(r);
    nsum += static_cast<uint32_t>(g.degree(y));
    tri += static_cast<uint32_t>(std::popcount(g.row(y) & nx));
  }
  return (static_cast<uint32_t>(g.degree(x)) << 20) | (nsum << 10) | (tri / 2);
}

// Whether the most recently added vertex v is, up to automorphism, the
// canonical deletion vertex of g.
bool is_canonical_child(const Graph& g, int v) {
  const int n = g.order();
  const uint32_t kv = vertex_key(g, v);
  std::array<uint32_t, kMaxOrder> keys{};
  uint32_t ties = uint32_t{1} << v;
  for (int x = 0; x < n; ++x) {
    if (x == v) continue;
    keys[x] = vertex_key(g, x);
    if (keys[x] < kv) {
      if (connected_without(g, x)) return false;
    } else if (keys[x] == kv) {
      ties |= uint32_t{1} << x;
    }
  }
  // v itself is never a cut vertex: its parent is connected.
  for (uint32_t t = ties & ~(uint32_t{1} << v); t; t &= t - 1) {
    const int x = std::countr_zero(t);
    if (!connected_without(g, x)) ties &= ~(uint32_t{1} << x);
  }
  if (std::has_single_bit(ties)) return true;

  std::vector<int> colors(n, 1);
  for (uint32_t t = ties; t; t &= t - 1) colors[std::countr_zero(t)] = 0;
  const Labeling lab = canonical_labeling(g, colors);
  int chosen = -1;
  for (uint32_t t = ties; t; t &= t - 1) {
    const int x = std::countr_zero(t);
    if (chosen < 0 || lab.position[x] < lab.position[chosen]) chosen = x;
  }
  if (chosen == v) return true;
  const std::vector<int> orbit = orbits_from_generators(n, lab.generators);
  return orbit[chosen] == orbit[v];
}

// Decides whether a neighbourhood mask is the least element of its orbit
// under the automorphism group of the parent.
class SubsetOrbits {
 public:
  explicit SubsetOrbits(const Graph& h) : n_(h.order()) {
    const Labeling lab = canonical_labeling(h);
    if (lab.generators.empty()) return;
    trivial_ = false;
    try {
      elements_ = group_elements(n_, lab.generators, kEnumerateLimit);
    } catch (const std::length_error&) {
      // Large group: precompute orbit minima over all masks instead.
      elements_.clear();
      least_.assign(std::size_t{1} << n_, 0);
      std::vector<uint8_t> seen(std::size_t{1} << n_, 0);
      std::vector<uint32_t> stack;
      for (uint32_t s = 0; s < (uint32_t{1} << n_); ++s) {
        if (seen[s]) continue;
        std::vector<uint32_t> orbit{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
          for (const Permutation& gen : lab.generators) {
            const uint32_t img = apply(gen, orbit[head]);
            if (!seen[img]) {
              seen[img] = 1;
              orbit.push_back(img);
            }
          }
        }
        for (uint32_t m : orbit) least_[m] = s;
      }
    }
  }

  bool is_representative(uint32_t s) const {
    if (trivial_) return true;
    if (!least_.empty()) return least_[s] == s;
    for (const Permutation& p : elements_) {
      if (apply(p, s) < s) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kEnumerateLimit = 2048;

  static uint32_t apply(const Permutation& p, uint32_t s) {
    uint32_t out = 0;
    for (uint32_t r = s; r; r &= r - 1) out |= uint32_t{1} << p[std::countr_zero(r)];
    return out;
  }

  int n_;
  bool trivial_ = true;
  std::vector<Permutation> elements_;
  std::vector<uint32_t> least_;
};

class Generator {
 public:
  Generator(const GenSpec& spec, const GenOptions& options) : spec_(spec), options_(options) {}

  // Explores the subtree below h (order m) and emits accepted graphs of order n.
  template <typename Emit, typename Split>
  void extend(const Graph& h, Emit&& emit, Split&& at_split) {
    const int m = h.order();
    if (m == spec_.n) {
      if (h.min_degree() >= spec_.min_degree) emit(h);
      return;
    }
    if (m == options_.split_level && !at_split(h)) return;

    const int remaining_after = spec_.n - m - 1;  // vertices still to come after this one
    const int cap = spec_.max_degree;
    const int need = spec_.min_degree;

    uint32_t non_cut = 0;
    for (int x = 0; x < m; ++x) {
      if (m == 1 || connected_without(h, x)) non_cut |= uint32_t{1} << x;
    }
    uint32_t open = 0;  // vertices that may still receive an edge
    for (int x = 0; x < m; ++x) {
      if (h.degree(x) < cap) open |= uint32_t{1} << x;
    }
    uint32_t starving = 0;  // must gain an edge now to reach min_degree
    for (int x = 0; x < m; ++x) {
      if (h.degree(x) + remaining_after < need) starving |= uint32_t{1} << x;
    }
    if (starving & ~open) return;

    const SubsetOrbits orbits(h);
    std::array<int, kMaxOrder> pool{};
    for (int d = 1; d <= std::min(cap, m); ++d) {
      if (d + remaining_after < need) continue;
      // A non-cut vertex of smaller degree left outside S would beat the new
      // vertex as deletion candidate.
      uint32_t forced = starving;
      for (uint32_t r = non_cut; r; r &= r - 1) {
        const int x = std::countr_zero(r);
        if (h.degree(x) < d) forced |= uint32_t{1} << x;
      }
      if (forced & ~open) continue;
      const int f = std::popcount(forced);
      if (f > d) continue;
      int pool_size = 0;
      for (uint32_t r = open & ~forced; r; r &= r - 1) pool[pool_size++] = std::countr_zero(r);
      const int choose = d - f;
      if (choose > pool_size) continue;
      // Gosper's hack over pool index subsets of size `choose`.
      const uint64_t limit = uint64_t{1} << pool_size;
      for (uint64_t comb = choose == 0 ? 0 : (uint64_t{1} << choose) - 1; comb < limit;) {
        uint32_t s = forced;
        for (uint64_t c = comb; c; c &= c - 1) s |= uint32_t{1} << pool[std::countr_zero(c)];
        if (orbits.is_representative(s)) {
          Graph g(m + 1);
          for (int x = 0; x < m; ++x) {
            for (uint32_t r = h.row(x) & ~((uint32_t{2} << x) - 1); r; r &= r - 1) g.add_edge(x, std::countr_zero(r));
          }
          for (uint32_t r = s; r; r &= r - 1) g.add_edge(m, std::countr_zero(r));
          if (feasible(g) && is_canonical_child(g, m)) extend(g, emit, at_split);
        }
        if (comb == 0) break;
        const uint64_t lowest = comb & (~comb + 1);
        const uint64_t ripple = comb + lowest;
        comb = (((ripple ^ comb) >> 2) / lowest) | ripple;
      }
    }
  }

 private:
  // The degree deficit left must be coverable by the vertices still to come.
  bool feasible(const Graph& g) const {
    const int remaining = spec_.n - g.order();
    int deficit = 0;
    for (int x = 0; x < g.order(); ++x) {
      const int d = g.degree(x);
      if (d + remaining < spec_.min_degree) return false;
      deficit += std::max(0, spec_.min_degree - d);
    }
    return deficit <= remaining * spec_.max_degree;
  }

  GenSpec spec_;
  GenOptions options_;
};

}  // namespace

void GenSpec::validate() const {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw std::invalid_argument("generator order must be in 1.." + std::to_string(kMaxGeneratedOrder) + ", got " +
                                std::to_string(n));
  }
  if (min_degree < 0 || min_degree > max_degree || max_degree >= n) {
    throw std::invalid_argument("degree bounds must satisfy 0 <= min_degree <= max_degree < n");
  }
  if (!connected_only) throw std::invalid_argument("only connected families are generated");
}

std::uint64_t generate(const GenSpec& spec, const GraphSink& sink, const GenOptions& options) {
  spec.validate();
  if (options.threads < 1) throw std::invalid_argument("threads must be positive");
  if (options.mod < 1 || options.res < 0 || options.res >= options.mod) {
    throw std::invalid_argument("shard must satisfy 0 <= res < mod");
  }
  const Graph root(1);
  std::uint64_t count = 0;
  auto emit_now = [&](const Graph& g) {
    ++count;
    sink(g);
  };
  if (spec.n == 1) {
    if (options.res == 0 && spec.min_degree == 0) emit_now(root);
    return count;
  }

  GenOptions opts = options;
  const bool sharded = opts.mod > 1 || opts.threads > 1;
  if (sharded && (opts.split_level < 1 || opts.split_level >= spec.n)) {
    opts.split_level = std::max(1, std::min(spec.n - 1, spec.n - 4));
  }
  if (!sharded) opts.split_level = 0;
  const auto mod = static_cast<std::uint64_t>(opts.mod);
  const auto res = static_cast<std::uint64_t>(opts.res);
  std::uint64_t index = 0;

  if (opts.threads == 1) {
    auto at_split = [&](const Graph&) { return index++ % mod == res; };
    Generator(spec, opts).extend(root, emit_now, at_split);
    return count;
  }

  // Threaded: collect this shard's split-level subtrees, run them as tasks,
  // and release their outputs in task order.
  std::vector<Graph> tasks;
  {
    auto at_split = [&](const Graph& h) {
      if (index++ % mod == res) tasks.push_back(h);
      return false;
    };
    Generator(spec, opts).extend(root, emit_now, at_split);
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, std::vector<Graph>> done;
  std::size_t next_release = 0;
  std::atomic<std::size_t> next_task{0};
  const std::size_t window = static_cast<std::size_t>(opts.threads) * 4;

  auto release = [&]() {  // caller holds mu
    for (auto it = done.find(next_release); it != done.end(); it = done.find(next_release)) {
      for (const Graph& g : it->second) emit_now(g);
      done.erase(it);
      ++next_release;
    }
    cv.notify_all();
  };

  auto worker = [&]() {
    GenOptions sub = opts;
    sub.split_level = 0;
    Generator local(spec, sub);
    auto never = [](const Graph&) { return true; };
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) return;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return t < next_release + window; });
      }
      std::vector<Graph> out;
      auto collect = [&](const Graph& g) { out.push_back(g); };
      local.extend(tasks[t], collect, never);
      std::lock_guard lock(mu);
      done.emplace(t, std::move(out));
      release();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < opts.threads; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return count;
}

}  // namespace copwin
