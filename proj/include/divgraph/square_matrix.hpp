#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace divgraph {

/// Dense row-major n x n matrix of doubles; used for pairwise distance and
/// similarity tables.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  void set_symmetric(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// |x_i - x_j| for points on the real line.
inline SquareMatrix line_distances(std::span<const double> points) {
  SquareMatrix d(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      d(i, j) = points[i] > points[j] ? points[i] - points[j] : points[j] - points[i];
    }
  }
  return d;
}

}  // namespace divgraph
