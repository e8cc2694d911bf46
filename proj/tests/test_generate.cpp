#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "copwin/canon.hpp"
#include "copwin/generate.hpp"
#include "copwin/graph6.hpp"
#include "oracles.hpp"

using namespace copwin;

namespace {

bool within(const Graph& g, int lo, int hi) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < lo || g.degree(v) > hi) return false;
  }
  return true;
}

std::vector<Graph> run(const GenSpec& spec, const GenOptions& options = {}) {
  std::vector<Graph> out;
  const std::uint64_t count = generate(spec, [&](const Graph& g) { out.push_back(g); }, options);
  EXPECT_EQ(count, out.size());
  return out;
}

}  // namespace

TEST(Generate, SingleVertex) {
  const auto graphs = run({1, 0, 0, true});
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0].order(), 1);
}

TEST(Generate, InvalidSpecs) {
  EXPECT_THROW(generate({0, 0, 0, true}, [](const Graph&) {}), std::invalid_argument);
  EXPECT_THROW(generate({17, 1, 3, true}, [](const Graph&) {}), std::invalid_argument);
  EXPECT_THROW(generate({6, 3, 2, true}, [](const Graph&) {}), std::invalid_argument);
  EXPECT_THROW(generate({6, 1, 6, true}, [](const Graph&) {}), std::invalid_argument);
  EXPECT_THROW(generate({6, 1, 5, false}, [](const Graph&) {}), std::invalid_argument);
}

// Every labelled graph, filtered and reduced to isomorphism classes by the
// brute-force canonical string.
TEST(Generate, MatchesLabelledEnumerationUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::pair<int, int>, std::set<std::string>> classes;
    oracle::for_each_labelled(n, [&](const Graph& g) {
      if (!oracle::connected(g)) return;
      const std::string key = oracle::brute_canonical(g);
      for (int lo = 0; lo <= 2; ++lo) {
        for (int hi = std::max(lo, 1); hi < n; ++hi) {
          if (within(g, lo, hi)) classes[{lo, hi}].insert(key);
        }
      }
    });
    for (const auto& [bounds, expected] : classes) {
      std::set<std::string> got;
      for (const Graph& g : run({n, bounds.first, bounds.second, true})) {
        EXPECT_TRUE(oracle::connected(g));
        EXPECT_TRUE(within(g, bounds.first, bounds.second));
        EXPECT_TRUE(got.insert(oracle::brute_canonical(g)).second) << "duplicate class " << write_graph6(g);
      }
      EXPECT_EQ(got, expected) << "n=" << n << " degrees " << bounds.first << ".." << bounds.second;
    }
  }
}

TEST(Generate, MatchesLabelledEnumerationAtSeven) {
  std::map<int, std::set<CanonicalForm>> classes;  // keyed by max degree bound
  oracle::for_each_labelled(7, [&](const Graph& g) {
    if (!oracle::connected(g)) return;
    const CanonicalForm f = canonical_form(g);
    for (int hi = g.max_degree(); hi <= 6; ++hi) classes[hi].insert(f);
  });
  for (int hi = 2; hi <= 6; ++hi) {
    std::set<CanonicalForm> got;
    for (const Graph& g : run({7, 1, hi, true})) EXPECT_TRUE(got.insert(canonical_form(g)).second);
    EXPECT_EQ(got, classes[hi]) << "max degree " << hi;
  }
  EXPECT_EQ(classes[6].size(), 853u);
}

TEST(Generate, PairwiseDistinctUpToNine) {
  for (int n = 2; n <= 9; ++n) {
    std::set<CanonicalForm> seen;
    const int hi = n <= 8 ? n - 1 : 4;
    for (const Graph& g : run({n, 1, hi, true})) {
      ASSERT_TRUE(seen.insert(canonical_form(g)).second) << write_graph6(g);
      ASSERT_TRUE(within(g, 1, hi));
      ASSERT_TRUE(is_connected(g));
    }
  }
}

TEST(Generate, SubcubicMinimumDegreeTwoCounts) {
  EXPECT_EQ(generate({10, 2, 3, true}, [](const Graph&) {}), 458u);
  EXPECT_EQ(generate({11, 2, 3, true}, [](const Graph&) {}), 1353u);
  EXPECT_EQ(generate({12, 2, 3, true}, [](const Graph&) {}), 4566u);
}

TEST(Generate, DeterministicStream) {
  const auto a = run({9, 2, 4, true});
  const auto b = run({9, 2, 4, true});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  GenOptions threaded;
  threaded.threads = 3;
  threaded.split_level = 6;
  const auto c = run({9, 2, 4, true}, threaded);
  const auto d = run({9, 2, 4, true}, threaded);
  ASSERT_EQ(c.size(), a.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c[i], d[i]);
}

TEST(Generate, ThreadsAndShardsCoverTheSameClasses) {
  const GenSpec spec{10, 2, 3, true};
  std::set<CanonicalForm> serial;
  for (const Graph& g : run(spec)) serial.insert(canonical_form(g));
  for (int threads : {2, 4}) {
    GenOptions o;
    o.threads = threads;
    o.split_level = 7;
    std::set<CanonicalForm> got;
    for (const Graph& g : run(spec, o)) EXPECT_TRUE(got.insert(canonical_form(g)).second);
    EXPECT_EQ(got, serial);
  }
  std::set<CanonicalForm> sharded;
  std::uint64_t total = 0;
  for (int res = 0; res < 5; ++res) {
    GenOptions o;
    o.split_level = 7;
    o.res = res;
    o.mod = 5;
    for (const Graph& g : run(spec, o)) {
      EXPECT_TRUE(sharded.insert(canonical_form(g)).second);
      ++total;
    }
  }
  EXPECT_EQ(total, serial.size());
  EXPECT_EQ(sharded, serial);
}
