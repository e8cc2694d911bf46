#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <unordered_set>

#include "copwin/game.hpp"
#include "copwin/generate.hpp"
#include "copwin/graph6.hpp"
#include "copwin/named_graphs.hpp"
#include "copwin/predicates.hpp"
#include "copwin/reductions.hpp"
#include "oracles.hpp"

using namespace copwin;

namespace {

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  generate({n, n > 1 ? 1 : 0, n - 1, true}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::unordered_set<CanonicalForm> neighbourhood_complements(const Graph& g) {
  std::unordered_set<CanonicalForm> out;
  for (int u = 0; u < g.order(); ++u) out.insert(canonical_form(remove_vertices(g, g.closed_neighborhood(u))));
  return out;
}

}  // namespace

TEST(Classify, NamedGraphs) {
  EXPECT_EQ(classify(named_graph(NamedGraph::kPetersen), 3).cop_number, 3);
  EXPECT_TRUE(classify(named_graph(NamedGraph::kRobertson), 3).exceeds());
  EXPECT_EQ(classify(named_graph(NamedGraph::kRobertson), 4).cop_number, 4);
  EXPECT_EQ(classify(path_graph(9), 3).cop_number, 1);
  EXPECT_EQ(classify(cycle_graph(9), 3).cop_number, 2);
  EXPECT_EQ(classify(cycle_graph(9), 1).bucket(), 2);
  EXPECT_THROW(classify(Graph(0), 3), std::invalid_argument);
}

TEST(Classify, MatchesEngineOnAllSmallConnectedGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const Classification fast = classify(g, 3);
      EXPECT_EQ(fast, classify_by_engine(g, 3)) << write_graph6(g);
      EXPECT_EQ(fast, classify(g, 3, false)) << write_graph6(g);
    }
  }
}

TEST(Classify, MatchesEngineOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 8 + trial % 6;
    const Graph g = oracle::random_connected_graph(rng, n, 0.12 + 0.04 * (trial % 7));
    EXPECT_EQ(classify(g, 3), classify_by_engine(g, 3)) << write_graph6(g);
  }
}

TEST(Classify, MatchesNaiveSolverOnSmallRandomGraphs) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 4, 0.35);
    const Classification c = classify(g, 3);
    int expected = 0;
    for (VertexSet comp : connected_components(g)) {
      expected = std::max(expected, oracle::NaiveGame::cop_number(induced_subgraph(g, comp), 3));
    }
    EXPECT_EQ(c.bucket(), expected) << write_graph6(g);
  }
}

TEST(StripCorners, ResultIsCornerFreeAndChoiceIndependent) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 7 + trial % 6, 0.2 + 0.03 * (trial % 6));
    const Graph first = strip_corners(g);
    EXPECT_FALSE(has_corner(first) && first.order() > 1);
    EXPECT_TRUE(is_connected(first));
    for (int rep = 0; rep < 3; ++rep) {
      const Graph other = strip_corners(g, [&](const std::vector<std::pair<int, int>>& list) {
        return static_cast<std::size_t>(rng() % list.size());
      });
      EXPECT_EQ(canonical_form(other), canonical_form(first)) << write_graph6(g);
    }
    // A corner-free result on two or more vertices is not cop-win, and every
    // deletion step keeps the cop number once it is at least 2; a single-vertex
    // result only says c(G) is 1 or 2.
    const int before = oracle::NaiveGame::cop_number(g, 3);
    if (first.order() > 1) {
      EXPECT_EQ(cop_number(first, 4), before) << write_graph6(g);
      EXPECT_GE(before, 2);
    } else {
      EXPECT_LE(before, 2);
    }
  }
}

TEST(StripCorners, PetersenWithCornersStripsBack) {
  const Graph p = named_graph(NamedGraph::kPetersen);
  for (const Graph& ext : corner_extensions(p, 5)) {
    EXPECT_EQ(canonical_form(strip_corners(ext)), canonical_form(p));
  }
}

TEST(DegreeShortcut, Thresholds) {
  EXPECT_EQ(degree_shortcut(complete_graph(5)), 2);
  EXPECT_EQ(degree_shortcut(star_graph(6)), 2);
  EXPECT_EQ(degree_shortcut(named_graph(NamedGraph::kPetersen)), 3);  // 3 > 10 - 11
  EXPECT_FALSE(degree_shortcut(named_graph(NamedGraph::kRobertson)).has_value());
  EXPECT_FALSE(degree_shortcut(cycle_graph(13)).has_value());
  EXPECT_EQ(degree_shortcut(cycle_graph(12)), 3);
  EXPECT_EQ(degree_shortcut(cycle_graph(7)), 2);
  EXPECT_FALSE(degree_shortcut(cycle_graph(8)) == 2);
}

TEST(DegreeShortcut, NeverContradictsTheEngine) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (auto bound = degree_shortcut(g)) {
        EXPECT_LE(*cop_number(g, 3), *bound) << write_graph6(g);
      }
    }
  }
  std::mt19937 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 8 + trial % 8, 0.1 + 0.05 * (trial % 6));
    if (auto bound = degree_shortcut(g)) {
      const auto c = cop_number(g, *bound);
      EXPECT_TRUE(c.has_value()) << write_graph6(g);
    }
  }
}

TEST(ComponentRule, CombinesByMaximum) {
  const Graph pet = named_graph(NamedGraph::kPetersen);
  const Graph rob = named_graph(NamedGraph::kRobertson);
  auto engine = [](int k) { return [k](const Graph& h) { return classify_by_engine(h, k); }; };
  EXPECT_EQ(component_rule(disjoint_union(pet, path_graph(3)), 3, engine(3)).cop_number, 3);
  EXPECT_EQ(component_rule(disjoint_union(cycle_graph(5), path_graph(3)), 3, engine(3)).cop_number, 2);
  EXPECT_TRUE(component_rule(disjoint_union(rob, path_graph(2)), 3, engine(3)).exceeds());
  EXPECT_EQ(component_rule(Graph(1), 3, engine(3)).cop_number, 1);
  EXPECT_THROW(component_rule(Graph(0), 3, engine(3)), std::invalid_argument);
  EXPECT_EQ(component_rule(disjoint_union(pet, Graph(1)), 3, engine(3)).cop_number, 3);
  // The leaf classifier runs once per component.
  int calls = 0;
  component_rule(disjoint_union(pet, disjoint_union(pet, pet)), 3, [&](const Graph& h) {
    ++calls;
    return classify_by_engine(h, 3);
  });
  EXPECT_EQ(calls, 3);
}

TEST(RetractRule, CycleExample) {
  const Graph c5 = cycle_graph(5);
  const auto r = retract_component_rule(c5, 0, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order(), 3);
  EXPECT_EQ(canonical_form(*r), canonical_form(path_graph(3)));
  EXPECT_FALSE(retract_component_rule(c5, 0, 1).has_value());
  // The whole graph dominated: nothing outside N[u].
  EXPECT_FALSE(retract_component_rule(star_graph(4), 0, 2).has_value());
}

TEST(RetractRule, PreservesThreshold) {
  std::mt19937 rng(15);
  int applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 7 + trial % 5, 0.15 + 0.04 * (trial % 5));
    for (int u = 0; u < g.order(); ++u) {
      for (int k = 2; k <= 3; ++k) {
        const auto r = retract_component_rule(g, u, k);
        if (!r) continue;
        ++applied;
        EXPECT_LT(r->order(), g.order());
        EXPECT_TRUE(is_connected(*r));
        EXPECT_EQ(cops_can_win(g, k), cops_can_win(*r, k)) << write_graph6(g) << " u=" << u << " k=" << k;
      }
    }
  }
  EXPECT_GT(applied, 0);
}

TEST(MFilter, RobertsonPassesWithItsOwnForms) {
  const Graph rob = named_graph(NamedGraph::kRobertson);
  EXPECT_TRUE(m_filter(rob, neighbourhood_complements(rob)));
  EXPECT_FALSE(m_filter(rob, {}));
}

TEST(MFilter, SmallExamples) {
  EXPECT_FALSE(m_filter(Graph(1), {}));
  EXPECT_FALSE(m_filter(cycle_graph(5), {}));
  EXPECT_TRUE(m_filter(cycle_graph(5), {canonical_form(complete_graph(2))}));
  // C6: G - N[u] is a path on 3 vertices.
  EXPECT_TRUE(m_filter(cycle_graph(6), {canonical_form(path_graph(3))}));
  // A graph with a corner never passes.
  const Graph p4 = path_graph(4);
  EXPECT_FALSE(m_filter(p4, neighbourhood_complements(p4)));
}

TEST(MFilter, RobertsonAgainstTheFourteenVertexList) {
  const std::string path = std::string(COPWIN_DATA_DIR) + "/three_cop_win_n14_d4.g6";
  std::ifstream probe(path);
  if (!probe) GTEST_SKIP() << "list file not present: " << path;
  std::unordered_set<CanonicalForm> forms;
  for (const Graph& g : read_graph6_file(path)) forms.insert(canonical_form(g));
  EXPECT_TRUE(m_filter(named_graph(NamedGraph::kRobertson), forms));
}

TEST(RetractRule, PendantPathAndPetersenComponent) {
  const Graph pet = named_graph(NamedGraph::kPetersen);
  // Petersen with the path 10-11-12 hanging from vertex 0.
  Graph tail(13);
  for (auto [a, b] : pet.edges()) tail.add_edge(a, b);
  tail.add_edge(0, 10);
  tail.add_edge(10, 11);
  tail.add_edge(11, 12);
  const auto r = retract_component_rule(tail, 10, 3);
  ASSERT_TRUE(r.has_value());
  EXPECT_LT(r->order(), tail.order());
  EXPECT_EQ(cops_can_win(*r, 3), cops_can_win(tail, 3));

  // A Petersen component of G - N[u] has cop number 3 and is never removed at k = 3.
  Graph handle(12);
  for (auto [a, b] : pet.edges()) handle.add_edge(a, b);
  handle.add_edge(0, 10);
  handle.add_edge(10, 11);
  EXPECT_FALSE(retract_component_rule(handle, 11, 3).has_value());
}

TEST(MFilter, CorneredPetersenAndDisconnectedRemainders) {
  const CorneredPetersen p1 = cornered_petersen(1);
  EXPECT_FALSE(m_filter(p1.graph, neighbourhood_complements(p1.graph)));
  // Corner-free graphs with a disconnected G - N[u] never pass, whatever the list.
  int checked = 0;
  for (int n = 6; n <= 8; ++n) {
    generate({n, 2, n - 1, true}, [&](const Graph& g) {
      if (!oracle::corners(g).empty()) return;
      bool split = false;
      for (int u = 0; u < g.order(); ++u) split = split || !is_connected(remove_vertices(g, g.closed_neighborhood(u)));
      if (!split) return;
      ++checked;
      EXPECT_FALSE(m_filter(g, neighbourhood_complements(g))) << write_graph6(g);
    });
  }
  EXPECT_GT(checked, 0);
}
