// Copyright 2026 The snakelp Authors
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

#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "snakelp/edgemap.hpp"
#include "snakelp/lp_model.hpp"
#include "snakelp/rng.hpp"

namespace snakelp::testutil {

/// Unique scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("snakelp_" + tag + "_" + std::to_string(++counter) + "_" +
             std::to_string(static_cast<unsigned>(::getpid())));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

/// Synthetic point sample on a wxh grid: M edge points with values in
/// (0.5, 1.0], T-M fill points with values in [0, 0.5).  Coordinates are
/// distinct by construction (row-major enumeration).
inline PointSample make_sample(int t_total, int m_total, std::uint64_t seed, int grid_w = 64) {
  Rng rng(seed);
  PointSample sample;
  sample.points.reserve(static_cast<std::size_t>(t_total));
  for (int i = 0; i < t_total; ++i) {
    SamplePoint pt;
    pt.row = i / grid_w;
    pt.col = i % grid_w;
    if (i < m_total) {
      pt.value = 0.5 + 0.5 * rng.uniform_open();
      sample.edge_idx.push_back(i);
    } else {
      pt.value = 0.5 * rng.uniform();
    }
    sample.points.push_back(pt);
  }
  return sample;
}

/// Random standard-form LP that is feasible and bounded by construction:
/// b = A x_feas with x_feas > 0, and c = A^T y + s with s > 0, so the
/// objective is bounded below by y.b on the feasible set.
struct RandomLP {
  LPStandardForm lp;
  std::vector<double> x_feasible;
};

inline RandomLP make_feasible_bounded_lp(std::uint64_t seed, int max_n = 10, int max_m = 5) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_n - 1)));
  const int max_rows = std::min(max_m, n - 1);
  const int m = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_rows)));

  std::vector<std::vector<double>> dense(m, std::vector<double>(n));
  for (auto& row : dense)
    for (double& v : row) v = 4.0 * rng.uniform() - 2.0;

  RandomLP out;
  out.x_feasible.resize(static_cast<std::size_t>(n));
  for (double& v : out.x_feasible) v = 0.1 + 1.9 * rng.uniform();

  std::vector<double> y(static_cast<std::size_t>(m));
  for (double& v : y) v = 2.0 * rng.uniform() - 1.0;
  std::vector<double> s(static_cast<std::size_t>(n));
  for (double& v : s) v = 0.05 + rng.uniform();

  LPStandardForm& lp = out.lp;
  lp.m = m;
  lp.n = n;
  lp.b.assign(static_cast<std::size_t>(m), 0.0);
  lp.c.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      lp.triplets.push_back({i, j, dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
      lp.b[static_cast<std::size_t>(i)] +=
          dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
          out.x_feasible[static_cast<std::size_t>(j)];
    }
  for (int j = 0; j < n; ++j) {
    double cj = s[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i)
      cj += dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
            y[static_cast<std::size_t>(i)];
    lp.c[static_cast<std::size_t>(j)] = cj;
  }
  return out;
}

}  // namespace snakelp::testutil
