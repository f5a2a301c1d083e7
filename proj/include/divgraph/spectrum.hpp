#pragma once

#include <vector>

#include "divgraph/graph.hpp"

namespace divgraph {

/// Eigenvalues of I - D^{-1/2} A D^{-1/2} in ascending order. Isolated nodes
/// get a zero diagonal entry, so they contribute eigenvalue 0.
/// Throws std::runtime_error if the eigensolver fails to converge.
std::vector<double> normalized_laplacian_spectrum(const Graph& g);

}  // namespace divgraph
