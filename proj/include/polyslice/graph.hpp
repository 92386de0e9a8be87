#pragma once

#include <vector>

namespace polyslice {

using Graph = std::vector<std::vector<int>>;  // adjacency lists

/// True when the subgraph induced by `subset` is connected (empty counts as
/// connected).
bool induced_connected(const Graph& g, const std::vector<int>& subset);

/// Maximum number of internally vertex-disjoint s-t paths (Menger), by unit
/// capacity max-flow on the split graph. A direct edge s-t counts as one path.
int local_connectivity(const Graph& g, int s, int t);

/// Vertex connectivity: the minimum local connectivity over all vertex pairs.
/// For a complete graph on n vertices this is n - 1.
int vertex_connectivity(const Graph& g);

}  // namespace polyslice
