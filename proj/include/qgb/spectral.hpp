#pragma once

#include <utility>
#include <vector>

#include "qgb/matrix.hpp"

namespace qgb {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Mat eigenvectors;                 // orthonormal columns, column i pairs with eigenvalues[i]
};

// L = I - D^{-1/2} A D^{-1/2}. Isolated nodes keep the identity row
// (their D^{-1/2} entry is taken as 0, the diagonal stays 1).
Mat normalized_laplacian(int num_nodes, const std::vector<std::pair<int, int>>& edges);

// Cyclic Jacobi on a symmetric matrix: sweeps visit the upper triangle in
// row-major order (p = 0..n-2, q = p+1..n-1) until the off-diagonal
// Frobenius norm drops below 1e-13 * max(1, ||A||_F), at most 100 sweeps.
// Eigenvalues come back ascending with matching eigenvector columns.
// Throws NumericError on non-convergence.
EigenDecomposition hermitian_eig(const Mat& sym);

// U(t) = V exp(-i Lambda t) V^T via hermitian_eig.
CMat evolution_operator(const Mat& sym, double t);

// Eigenvectors of the normalized Laplacian by ascending eigenvalue, skipping
// index 0, next k as columns; zero-padded when the graph has fewer than k+1
// nodes. Each column's sign is fixed so its largest-magnitude entry is
// positive (magnitude ties resolved by lowest node index).
Mat laplacian_pe(int num_nodes, const std::vector<std::pair<int, int>>& edges, int k);

}  // namespace qgb
