// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Radial clustering: 2-D principal-component projection of ballots,
// balanced angular sectors ("pizza slices"), and round-robin mixing.

#ifndef AGORA_CLUSTERING_HPP_
#define AGORA_CLUSTERING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agora/model.hpp"

namespace agora {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Voters x projects 0/1 approval matrix, rows in election voter order.
DenseMatrix ballot_matrix(const Election& e);

struct OpinionPoint {
  VoterId voter_id;
  double pc1 = 0.0;
  double pc2 = 0.0;
  /// atan2(pc2 - mean(pc2), pc1 - mean(pc1)) in degrees, in [0, 360).
  double theta_deg = 0.0;
  /// Voter sits on the centroid; theta derived from a hash of the id.
  bool theta_from_hash = false;
};

struct ProjectionOptions {
  /// Scale columns to unit variance after centering.
  bool standardize = false;
  /// Stop when the angle between successive iterates drops below this.
  double tolerance = 1e-9;
  int max_iterations = 1000;
  /// Second eigenvalue below this means rank < 2.
  double degenerate_eigenvalue = 1e-12;
  /// On rank < 2 data return points on the first axis instead of throwing.
  bool fallback_on_degenerate = false;
};

struct Projection {
  std::vector<OpinionPoint> points;
  /// Unit loading vectors of the two leading components (length = columns).
  std::vector<double> component1;
  std::vector<double> component2;
  double eigenvalue1 = 0.0;
  double eigenvalue2 = 0.0;
  int iterations1 = 0;
  int iterations2 = 0;
  /// Set when the rank < 2 fallback was taken.
  bool degenerate = false;
};

/// Leading eigenpair of a symmetric matrix by power iteration, re-orthogonalised
/// against `exclude` each step. Exposed for testing.
struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
  int iterations = 0;
};
Eigenpair power_iteration(const DenseMatrix& symmetric, std::span<const std::vector<double>> exclude,
                          double tolerance, int max_iterations);

/// Project rows of `data` (voters x items) onto the top-2 covariance
/// eigenvectors. Each component is signed so its largest-magnitude loading is
/// positive. Throws DegenerateData on rank < 2 unless the fallback is enabled.
Projection project_2d(const DenseMatrix& data, std::span<const VoterId> voter_ids,
                      const ProjectionOptions& options = {});

struct SectorBounds {
  /// Counter-clockwise arc from start_deg spanning span_deg degrees.
  double start_deg = 0.0;
  double span_deg = 0.0;
};

struct Group {
  std::string label;
  std::vector<VoterId> members;
  /// Homogeneous round only.
  std::optional<SectorBounds> sector;
  /// Heterogeneous round only: homogeneous label of each member.
  std::vector<std::string> source_labels;
};

struct GroupAssignment {
  Round round = Round::Homogeneous;
  std::vector<Group> groups;

  /// Label of the group containing `voter`, or empty.
  std::string group_of(std::string_view voter) const;
  std::vector<std::size_t> sizes() const;
};

/// Homogeneous round: voters sorted by angle, cut at the largest angular gap
/// (ties: smallest start angle) and split into k contiguous runs of sizes
/// ceil(n/k) (n mod k times) then floor(n/k). Labels A, B, C, ... in angular
/// order. Throws TooFewVoters when n < k or k < 1.
GroupAssignment radial_partition(std::span<const OpinionPoint> points, std::size_t k);

/// Heterogeneous round: the j-th member of homogeneous group g joins group
/// (g + j) mod k. Labels 1..k.
GroupAssignment mix_groups(const GroupAssignment& homogeneous);

/// Excel-style label: 0 -> "A", 25 -> "Z", 26 -> "AA".
std::string sector_label(std::size_t index);

}  // namespace agora

#endif  // AGORA_CLUSTERING_HPP_
