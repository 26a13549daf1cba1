#pragma once

#include <cstdint>
#include <vector>

#include "netinterp/graph.hpp"

namespace netinterp {

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n);
    Matrix columns(int first, int count) const;  // copy of a column block
};

// D^{-1/2} A D^{-1/2}; rows and columns of isolated vertices are zero.
Matrix normalized_adjacency(const Graph& g);

// Eigenvalues in descending order; eigenvector columns aligned to them.
struct SymmetricSpectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-12. Throws on input asymmetric beyond 1e-12.
SymmetricSpectrum eigen_symmetric(const Matrix& m);

// sqrt(1 - sigma_min(U^T V)^2) for orthonormal bases with equal column
// counts. sigma_min comes from a one-sided Jacobi SVD of the k x k product.
double subspace_distance(const Matrix& u, const Matrix& v);

struct ClusterAssignment {
    std::vector<int> labels;
    int k = 0;
};

// Normalized spectral clustering: k-means (best of 10 seeded restarts by
// within-cluster sum of squares) on the row-normalized top-k eigenvectors of
// the normalized adjacency.
ClusterAssignment spectral_cluster(const Graph& g, int k, uint64_t seed = 0);

// Best label-permutation agreement fraction; k <= 5 enumerated exactly.
double recovery_rate(const ClusterAssignment& assignment, const std::vector<int>& truth);

enum class SbmScenario { Split, Independent };

struct SbmExperimentConfig {
    int n = 120;
    double p = 0.9;
    double q = 0.1;
    double rate = 1.0;
    uint64_t seed = 0;
    int64_t stride = 25;  // spectrum sampling stride along the trajectory
    int top_k = 3;
};

struct SbmExperimentRow {
    int64_t step = 0;
    double recovery = 0.0;
    double subspace_dist = 0.0;
    std::vector<double> top_eigs;
};

struct SbmExperimentResult {
    std::vector<SbmExperimentRow> rows;
    // full spectra at the sampled steps, and for the equispaced linear matrix
    // interpolation between the endpoint normalized adjacencies
    std::vector<std::pair<int64_t, std::vector<double>>> spectra;
    std::vector<std::pair<double, std::vector<double>>> linear_spectra;
    int64_t total_steps = 0;
    std::vector<int> truth;
    double max_eigenvalue_jump = 0.0;  // between consecutive sampled spectra
};

// 2-block -> 3-block change-point experiment: runs the interpolation
// (until target, d_t = 0), records recovery against the target's planted
// labels, the subspace distance of the top-k eigenspaces against the target,
// and full spectra at the given stride, plus the linear matrix interpolation
// spectra for comparison.
SbmExperimentResult sbm_transition_experiment(SbmScenario scenario, const SbmExperimentConfig& cfg);

}  // namespace netinterp
