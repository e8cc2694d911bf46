#include "copwin/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "copwin/graph6.hpp"

namespace copwin {

namespace {

using Row = std::array<uint32_t, kMaxOrder>;
using Perm = std::array<uint8_t, kMaxOrder>;

/// Ordered partition; cells[i] is a vertex mask.
struct Partition {
  std::array<uint32_t, kMaxOrder> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

class Searcher {
 public:
  Searcher(const Graph& g, std::span<const int> colors) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row(v);
    Partition root;
    std::vector<uint32_t> splitters;
    if (colors.empty()) {
      if (n_ > 0) root.cells[root.count++] = VertexSet::range(n_).bits();
    } else {
      std::set<int> values(colors.begin(), colors.end());
      for (int value : values) {
        uint32_t mask = 0;
        for (int v = 0; v < n_; ++v) {
          if (colors[v] == value) mask |= uint32_t{1} << v;
        }
        root.cells[root.count++] = mask;
      }
    }
    for (int i = 0; i < root.count; ++i) splitters.push_back(root.cells[i]);
    refine(root, splitters);
    root_ = root;
  }

  Labeling run() {
    if (n_ > 0) explore(root_, 0);
    Labeling out;
    out.order.assign(best_lab_.begin(), best_lab_.begin() + n_);
    out.position.assign(n_, 0);
    for (int p = 0; p < n_; ++p) out.position[out.order[p]] = p;
    for (const Perm& gen : generators_) out.generators.emplace_back(gen.begin(), gen.begin() + n_);
    return out;
  }

 private:
  // Splits cells until the partition is equitable. Splitters are processed
  // in FIFO order and split pieces are ordered by neighbour count, so the
  // result depends only on the isomorphism type of (graph, partition).
  void refine(Partition& p, std::vector<uint32_t>& queue) const {
    std::size_t head = 0;
    while (head < queue.size()) {
      const uint32_t splitter = queue[head++];
      for (int ci = 0; ci < p.count; ++ci) {
        const uint32_t cell = p.cells[ci];
        if (std::has_single_bit(cell)) continue;
        std::array<uint32_t, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder + 1, hi = -1;
        for (uint32_t rest = cell; rest; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          int c = std::popcount(adj_[x] & splitter);
          by_count[c] |= uint32_t{1} << x;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        std::array<uint32_t, kMaxOrder> pieces{};
        int npieces = 0;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) pieces[npieces++] = by_count[c];
        }
        // Replace the cell by its pieces.
        for (int j = p.count - 1; j > ci; --j) p.cells[j + npieces - 1] = p.cells[j];
        for (int j = 0; j < npieces; ++j) p.cells[ci + j] = pieces[j];
        p.count += npieces - 1;
        auto queued = std::find(queue.begin() + static_cast<std::ptrdiff_t>(head), queue.end(), cell);
        if (queued != queue.end()) {
          *queued = pieces[0];
          for (int j = 1; j < npieces; ++j) queue.push_back(pieces[j]);
        } else {
          int largest = 0;
          for (int j = 1; j < npieces; ++j) {
            if (std::popcount(pieces[j]) > std::popcount(pieces[largest])) largest = j;
          }
          for (int j = 0; j < npieces; ++j) {
            if (j != largest) queue.push_back(pieces[j]);
          }
        }
        ci += npieces - 1;
      }
    }
  }

  Row certificate(const Perm& lab) const {
    Perm pos{};
    for (int p = 0; p < n_; ++p) pos[lab[p]] = static_cast<uint8_t>(p);
    Row rows{};
    for (int p = 0; p < n_; ++p) {
      uint32_t r = 0;
      for (uint32_t rest = adj_[lab[p]]; rest; rest &= rest - 1) r |= uint32_t{1} << pos[std::countr_zero(rest)];
      rows[p] = r;
    }
    return rows;
  }

  int compare(const Row& a, const Row& b) const {
    for (int p = 0; p < n_; ++p) {
      if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
    }
    return 0;
  }

  // Automorphism sending lab_from[p] to lab_to[p].
  Perm automorphism(const Perm& lab_from, const Perm& lab_to) const {
    Perm gamma{};
    for (int p = 0; p < n_; ++p) gamma[lab_from[p]] = lab_to[p];
    return gamma;
  }

  // Union-find orbits of the subgroup generated by generators fixing path_[0..depth).
  void orbits_fixing(int depth, std::array<uint8_t, kMaxOrder>& root) const {
    for (int v = 0; v < n_; ++v) root[v] = static_cast<uint8_t>(v);
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const Perm& gen : generators_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gen[path_[d]] == path_[d];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) root[std::max(a, b)] = static_cast<uint8_t>(std::min(a, b));
      }
    }
    for (int v = 0; v < n_; ++v) root[v] = static_cast<uint8_t>(find(v));
  }

  void record(const Perm& gamma) {
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (identity) return;
    if (std::find(generators_.begin(), generators_.end(), gamma) == generators_.end()) {
      generators_.push_back(gamma);
    }
  }

  // Returns the depth the search should unwind to; `depth` means continue.
  int explore(const Partition& part, int depth) {
    if (part.discrete(n_)) return leaf(part, depth);

    int target = 0;
    while (std::has_single_bit(part.cells[target])) ++target;
    const uint32_t cell = part.cells[target];

    uint32_t explored = 0;
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    std::array<uint8_t, kMaxOrder> orbit{};
    for (uint32_t rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!generators_.empty()) {
        if (seen_generators != generators_.size()) {
          orbits_fixing(depth, orbit);
          seen_generators = generators_.size();
        }
        bool equivalent = false;
        for (uint32_t e = explored; e && !equivalent; e &= e - 1) {
          equivalent = orbit[std::countr_zero(e)] == orbit[v];
        }
        if (equivalent) continue;
      }
      explored |= uint32_t{1} << v;

      Partition child = part;
      for (int j = child.count - 1; j > target; --j) child.cells[j + 1] = child.cells[j];
      child.cells[target] = uint32_t{1} << v;
      child.cells[target + 1] = cell & ~(uint32_t{1} << v);
      ++child.count;
      std::vector<uint32_t> queue{child.cells[target]};
      refine(child, queue);

      path_[depth] = static_cast<uint8_t>(v);
      int back = explore(child, depth + 1);
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Partition& part, int depth) {
    Perm lab{};
    for (int p = 0; p < n_; ++p) lab[p] = static_cast<uint8_t>(std::countr_zero(part.cells[p]));
    Row cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      first_path_ = path_;
      first_depth_ = depth;
      return depth;
    }
    if (compare(cert, first_cert_) == 0) {
      record(automorphism(lab, first_lab_));
      int common = 0;
      while (common < depth && common < first_depth_ && path_[common] == first_path_[common]) ++common;
      return common;
    }
    int cmp = compare(cert, best_cert_);
    if (cmp == 0) {
      if (generators_.size() < 4 * static_cast<std::size_t>(n_)) record(automorphism(lab, best_lab_));
    } else if (cmp > 0) {
      best_lab_ = lab;
      best_cert_ = cert;
    }
    return depth;
  }

  int n_;
  Row adj_{};
  Partition root_;
  std::array<uint8_t, kMaxOrder> path_{};
  bool have_first_ = false;
  Perm first_lab_{}, best_lab_{};
  Row first_cert_{}, best_cert_{};
  std::array<uint8_t, kMaxOrder> first_path_{};
  int first_depth_ = 0;
  std::vector<Perm> generators_;
};

}  // namespace

Labeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw std::invalid_argument("color vector length does not match graph order");
  }
  return Searcher(g, colors).run();
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  Labeling lab = canonical_labeling(g, colors);
  std::string bytes = write_graph6(relabel(g, lab.position));
  if (!colors.empty()) {
    bytes.push_back('|');
    for (int p = 0; p < g.order(); ++p) {
      bytes += std::to_string(colors[lab.order[p]]);
      bytes.push_back(',');
    }
  }
  return CanonicalForm(std::move(bytes));
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g).position); }

std::vector<int> orbits_from_generators(int n, std::span<const Permutation> generators) {
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Permutation& gen : generators) {
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(gen[v]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int v = 0; v < n; ++v) root[v] = find(v);
  return root;
}

std::vector<Permutation> group_elements(int n, std::span<const Permutation> generators, std::size_t limit) {
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> seen{identity};
  std::vector<Permutation> out{identity};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& gen : generators) {
      Permutation next(n);
      for (int v = 0; v < n; ++v) next[v] = gen[out[head][v]];
      if (seen.insert(next).second) {
        if (out.size() >= limit) throw std::length_error("automorphism group exceeds enumeration limit");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace copwin
