#include <Eigen/Eigenvalues>

#include <stdexcept>

#include "distkit/catalog.hpp"

namespace distkit::catalog {

Embedding graph_embed(const GraphSpec& graph, const Quad& a, const Quad& b, double tol) {
  graph.validate();
  if (a == b) throw std::invalid_argument("inner products must differ");
  for (const Quad* v : {&a, &b}) {
    if (*v < Quad(-1L) || *v >= Quad(1L)) throw std::invalid_argument("inner product " + v->str() + " outside [-1, 1)");
  }
  Embedding out;
  out.gram = ExactGram{graph.n, graph.n, {}};
  out.gram.entries.reserve(graph.n * graph.n);
  for (std::size_t i = 0; i < graph.n; ++i) {
    for (std::size_t j = 0; j < graph.n; ++j) {
      out.gram.entries.push_back(i == j ? Quad(1L) : graph.adjacent(i, j) ? a : b);
    }
  }
  const auto n = static_cast<Eigen::Index>(graph.n);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = out.gram.at(i, j).to_double();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  out.min_eigenvalue = ev.minCoeff();
  out.max_eigenvalue = ev.maxCoeff();
  out.feasible = out.min_eigenvalue >= -1e-9 * out.max_eigenvalue;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (ev(k) > 1e-8 * out.max_eigenvalue) ++out.rank;
  }
  if (!out.feasible) return out;
  out.gram.dim = out.rank;
  out.points = points_from_gram(to_float(out.gram), out.rank, tol);
  return out;
}

}  // namespace distkit::catalog
