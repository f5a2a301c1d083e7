#include "divgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace divgraph {

std::vector<double> normalized_laplacian_spectrum(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> inv_sqrt_deg(g.node_count(), 0.0);
  for (Node u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) > 0) {
      inv_sqrt_deg[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)));
      lap(u, u) = 1.0;
    }
  }
  for (Node u = 0; u < g.node_count(); ++u) {
    for (Node v : g.neighbors(u)) lap(u, v) = -inv_sqrt_deg[u] * inv_sqrt_deg[v];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("normalized Laplacian eigensolver did not converge");
  }
  std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace divgraph
