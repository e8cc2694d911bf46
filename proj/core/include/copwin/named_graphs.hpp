#pragma once

#include <string>
#include <string_view>

#include "copwin/graph.hpp"

namespace copwin {

enum class NamedGraph {
  kPetersen,
  kRobertson,
  kDodecahedral,
  kCorneredPetersen1,
  kCorneredPetersen2,
  kCorneredPetersen3,
  kCorneredPetersen4,
  kCorneredPetersen5,
  kCorneredPetersen6,
};

/// Edge lists transcribed from the standard drawings. The Petersen graph uses
/// the outer cycle alpha_1..alpha_5 = 0, 2, 8, 9, 3 and the inner vertices
/// beta_1..beta_5 = 1, 4, 6, 7, 5 (beta_i adjacent to alpha_i).
Graph named_graph(NamedGraph which);
/// Accepts "petersen", "robertson", "dodecahedral" and "cornered_petersen_<i>" for i in 1..6.
/// Throws std::invalid_argument for unknown names.
Graph named_graph(std::string_view name);
std::string to_string(NamedGraph which);

/// 1-based alpha/beta labels of the Petersen drawing.
int petersen_alpha(int i);
int petersen_beta(int i);

/// Petersen graph plus one corner vertex m cornered by m'.
struct CorneredPetersen {
  Graph graph;
  int m = 10;
  int m_prime = 0;
};

/// i = 0 gives the plain Petersen graph (m = -1, the corner vertex is absent).
/// For i in {5, 6} the two vertices m and m' are interchangeable; pass
/// swap_roles to get the labelling with the roles exchanged.
CorneredPetersen cornered_petersen(int i, bool swap_roles = false);

}  // namespace copwin
