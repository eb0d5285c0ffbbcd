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

#include "agora/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace agora {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void multiply(const DenseMatrix& m, std::span<const double> x, std::vector<double>& y) {
  y.assign(m.rows(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) y[r] = dot(m.row(r), x);
}

void orthogonalize(std::vector<double>& v, std::span<const std::vector<double>> basis) {
  for (const auto& b : basis) {
    const double c = dot(v, b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
  }
}

double normalize_degrees(double deg) {
  double d = std::fmod(deg, 360.0);
  if (d < 0) d += 360.0;
  if (d >= 360.0) d -= 360.0;
  return d;
}

double hashed_angle(std::string_view id) {
  // Top 53 bits give a uniform double in [0, 1).
  const double unit = static_cast<double>(fnv1a64(id) >> 11) * 0x1.0p-53;
  return unit * 360.0;
}

// Largest-magnitude entry positive; first index wins ties.
void fix_sign(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < 0) {
    for (auto& x : v) x = -x;
  }
}

}  // namespace

DenseMatrix ballot_matrix(const Election& e) {
  DenseMatrix m(e.voter_count(), e.project_count());
  for (std::size_t v = 0; v < e.voter_count(); ++v) {
    for (std::size_t p : e.approvals()[v]) m(v, p) = 1.0;
  }
  return m;
}

Eigenpair power_iteration(const DenseMatrix& symmetric,
                          std::span<const std::vector<double>> exclude, double tolerance,
                          int max_iterations) {
  const std::size_t n = symmetric.rows();
  Eigenpair out;
  if (n == 0) return out;

  // Start from the row with the largest norm (a column of C), nudged so it is
  // never exactly orthogonal to the target eigenvector.
  std::size_t seed_row = 0;
  double seed_norm = -1.0;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<double> row(symmetric.row(r).begin(), symmetric.row(r).end());
    orthogonalize(row, exclude);
    const double nr = norm(row);
    if (nr > seed_norm) {
      seed_norm = nr;
      seed_row = r;
    }
  }
  std::vector<double> v(symmetric.row(seed_row).begin(), symmetric.row(seed_row).end());
  for (std::size_t i = 0; i < n; ++i) v[i] += 1e-3 / static_cast<double>(i + 2);
  orthogonalize(v, exclude);
  double nv = norm(v);
  if (nv == 0.0) {
    v.assign(n, 0.0);
    v[0] = 1.0;
    orthogonalize(v, exclude);
    nv = norm(v);
  }
  for (auto& x : v) x /= nv;

  std::vector<double> w;
  for (int it = 1; it <= max_iterations; ++it) {
    out.iterations = it;
    multiply(symmetric, v, w);
    orthogonalize(w, exclude);
    const double nw = norm(w);
    if (nw < 1e-300) break;  // v spans the null space
    for (auto& x : w) x /= nw;
    // sine of the angle between successive iterates
    const double c = dot(v, w);
    if (c < 0) {
      for (auto& x : w) x = -x;
    }
    double sin2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = w[i] - std::abs(c) * v[i];
      sin2 += d * d;
    }
    v.swap(w);
    if (std::sqrt(sin2) < tolerance) break;
  }
  multiply(symmetric, v, w);
  out.value = dot(v, w);
  out.vector = std::move(v);
  return out;
}

Projection project_2d(const DenseMatrix& data, std::span<const VoterId> voter_ids,
                      const ProjectionOptions& options) {
  const std::size_t n = data.rows();
  const std::size_t m = data.cols();
  if (n < 2 || m < 2) throw std::invalid_argument("projection needs at least 2 rows and 2 columns");
  if (voter_ids.size() != n) throw std::invalid_argument("one voter id per matrix row required");

  DenseMatrix centered(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += data(r, c);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      centered(r, c) = data(r, c) - mean;
      ss += centered(r, c) * centered(r, c);
    }
    if (options.standardize) {
      const double sd = std::sqrt(ss / static_cast<double>(n - 1));
      if (sd > 0.0) {
        for (std::size_t r = 0; r < n; ++r) centered(r, c) /= sd;
      }
    }
  }

  DenseMatrix cov(m, m);
  const double denom = static_cast<double>(n - 1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += centered(r, a) * centered(r, b);
      cov(a, b) = cov(b, a) = s / denom;
    }
  }

  Projection out;
  Eigenpair first = power_iteration(cov, {}, options.tolerance, options.max_iterations);
  fix_sign(first.vector);
  DenseMatrix deflated = cov;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      deflated(a, b) -= first.value * first.vector[a] * first.vector[b];
    }
  }
  const std::vector<std::vector<double>> basis{first.vector};
  Eigenpair second = power_iteration(deflated, basis, options.tolerance, options.max_iterations);
  fix_sign(second.vector);

  out.eigenvalue1 = first.value;
  out.eigenvalue2 = second.value;
  out.iterations1 = first.iterations;
  out.iterations2 = second.iterations;

  if (second.value < options.degenerate_eigenvalue) {
    if (!options.fallback_on_degenerate) {
      throw DegenerateData("opinion data has rank < 2 (second eigenvalue " +
                           std::to_string(second.value) + ")");
    }
    out.degenerate = true;
    second.vector.assign(m, 0.0);
  }
  out.component1 = first.vector;
  out.component2 = second.vector;

  out.points.resize(n);
  double mean1 = 0.0;
  double mean2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    out.points[r].voter_id = voter_ids[r];
    out.points[r].pc1 = dot(centered.row(r), out.component1);
    out.points[r].pc2 = dot(centered.row(r), out.component2);
    mean1 += out.points[r].pc1;
    mean2 += out.points[r].pc2;
  }
  mean1 /= static_cast<double>(n);
  mean2 /= static_cast<double>(n);

  for (auto& p : out.points) {
    const double dx = p.pc1 - mean1;
    const double dy = p.pc2 - mean2;
    if (std::hypot(dx, dy) < 1e-9) {
      p.theta_deg = hashed_angle(p.voter_id);
      p.theta_from_hash = true;
    } else if (out.degenerate) {
      p.theta_deg = dx > 0 ? 0.0 : 180.0;
    } else {
      p.theta_deg = normalize_degrees(std::atan2(dy, dx) * 180.0 / std::numbers::pi);
    }
  }
  return out;
}

std::string sector_label(std::size_t index) {
  std::string label;
  std::size_t i = index + 1;
  while (i > 0) {
    --i;
    label.insert(label.begin(), static_cast<char>('A' + i % 26));
    i /= 26;
  }
  return label;
}

std::string GroupAssignment::group_of(std::string_view voter) const {
  for (const auto& g : groups) {
    if (std::find(g.members.begin(), g.members.end(), voter) != g.members.end()) return g.label;
  }
  return {};
}

std::vector<std::size_t> GroupAssignment::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.members.size());
  return out;
}

GroupAssignment radial_partition(std::span<const OpinionPoint> points, std::size_t k) {
  const std::size_t n = points.size();
  if (k < 1) throw TooFewVoters("group count must be at least 1");
  if (n < k) {
    throw TooFewVoters(std::to_string(n) + " voters cannot fill " + std::to_string(k) + " groups");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].theta_deg != points[b].theta_deg) return points[a].theta_deg < points[b].theta_deg;
    return points[a].voter_id < points[b].voter_id;
  });
  auto theta = [&](std::size_t pos) { return points[order[pos % n]].theta_deg; };
  auto gap_after = [&](std::size_t pos) {
    if (n == 1) return 360.0;
    double g = theta(pos + 1) - theta(pos);
    if (pos + 1 == n) g += 360.0;
    return g;
  };

  // cut in front of position `start`, the voter following the largest gap
  std::size_t start = 0;
  double best_gap = -1.0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const double g = gap_after(pos);
    const std::size_t next = (pos + 1) % n;
    if (g > best_gap || (g == best_gap && theta(next) < theta(start))) {
      best_gap = g;
      start = next;
    }
  }

  GroupAssignment out;
  out.round = Round::Homogeneous;
  const std::size_t base = n / k;
  const std::size_t extra = n % k;
  std::size_t pos = start;
  std::vector<std::size_t> first_pos(k);
  std::vector<std::size_t> last_pos(k);
  for (std::size_t g = 0; g < k; ++g) {
    Group group;
    group.label = sector_label(g);
    const std::size_t size = base + (g < extra ? 1 : 0);
    first_pos[g] = pos;
    for (std::size_t j = 0; j < size; ++j, ++pos) {
      group.members.push_back(points[order[pos % n]].voter_id);
    }
    last_pos[g] = pos - 1;
    out.groups.push_back(std::move(group));
  }

  // Boundary after group g: midpoint of the gap to the next group's first voter.
  std::vector<double> boundary(k);
  for (std::size_t g = 0; g < k; ++g) {
    boundary[g] = normalize_degrees(theta(last_pos[g]) + gap_after(last_pos[g] % n) / 2.0);
  }
  for (std::size_t g = 0; g < k; ++g) {
    const double from = boundary[(g + k - 1) % k];
    const double to = boundary[g];
    double span = k == 1 ? 360.0 : normalize_degrees(to - from);
    out.groups[g].sector = SectorBounds{from, span};
  }
  return out;
}

GroupAssignment mix_groups(const GroupAssignment& homogeneous) {
  const std::size_t k = homogeneous.groups.size();
  GroupAssignment out;
  out.round = Round::Heterogeneous;
  out.groups.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.groups[t].label = std::to_string(t + 1);
  for (std::size_t g = 0; g < k; ++g) {
    const auto& members = homogeneous.groups[g].members;
    for (std::size_t j = 0; j < members.size(); ++j) {
      auto& target = out.groups[(g + j) % k];
      target.members.push_back(members[j]);
      target.source_labels.push_back(homogeneous.groups[g].label);
    }
  }
  return out;
}

}  // namespace agora
