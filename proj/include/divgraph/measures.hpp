#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/square_matrix.hpp"

namespace divgraph {

enum class Measure {
  Energy,
  Average,
  SumAverage,
  Diameter,
  SumDiameter,
  Bottleneck,
  SumBottleneck,
  NumCircles,
};

/// Lower-case tag: "energy", "average", "sum_average", ...
std::string_view to_string(Measure m);
/// Throws std::invalid_argument listing the valid tags.
Measure parse_measure(std::string_view name);

struct MeasureConfig {
  Measure measure = Measure::Energy;
  double gamma = 1.0;      // Energy exponent
  double epsilon = 1e-5;   // added to every distance inside a reciprocal
  double threshold = 0.0;  // NumCircles radius

  /// Throws std::invalid_argument unless gamma > 0 and epsilon > 0.
  void validate() const;
};

/// Thrown by exact searches whose cost would be exponential in the input size.
class UnsupportedSize : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Set-level functionals over an N x N distance table. All require N >= 2
// and throw std::invalid_argument otherwise.

/// -(1/(N(N-1))) sum_{i != j} 1/(D_ij + epsilon)^gamma; larger is more diverse.
double energy_signed(const SquareMatrix& dist, double gamma, double epsilon);
/// (1/(N(N-1))) sum_{i != j} 1/(D_ij + epsilon); lower is more diverse.
double energy_penalty(const SquareMatrix& dist, double epsilon);
double average(const SquareMatrix& dist);
double sum_average(const SquareMatrix& dist);
double diameter(const SquareMatrix& dist);
double sum_diameter(const SquareMatrix& dist);
double bottleneck(const SquareMatrix& dist);
double sum_bottleneck(const SquareMatrix& dist);
/// Largest subset whose pairwise distances all exceed t. Exact; throws
/// UnsupportedSize for N > 25.
std::size_t num_circles(const SquareMatrix& dist, double t);

/// exp of the Shannon entropy of the eigenvalues of K/N. K must be symmetric
/// with unit diagonal (within 1e-9); eigenvalues below -1e-9 are rejected.
double vendi_score(const SquareMatrix& similarity);

/// The configured measure; "higher is more diverse" for every tag.
double diversity(const MeasureConfig& cfg, const SquareMatrix& dist);

/// Fitness of element `self` with respect to the others, given its distance
/// row. Higher means the element contributes more diversity:
///   Energy              -(1/(N-1)) sum_j 1/(D+eps)^gamma
///   Average/SumAverage   (1/(N-1)) sum_j D
///   Diameter/SumDiameter max_j D
///   Bottleneck/SumBn     min_j D
///   NumCircles           fraction of j with D > t
/// A row with no other elements has fitness 0.
double fitness_from_row(const MeasureConfig& cfg, std::span<const double> row, std::size_t self);

/// For a candidate with distances `dists` to every current element,
/// out[i] = fitness of the candidate with respect to all elements except i.
void fitness_excluding_each(const MeasureConfig& cfg, std::span<const double> dists,
                            std::vector<double>& out);

/// Running fitness of a candidate against a growing selected set.
class FitnessAccumulator {
 public:
  void add(const MeasureConfig& cfg, double d);
  double value(const MeasureConfig& cfg) const;
  std::size_t count() const { return count_; }

 private:
  std::size_t count_ = 0;
  double sum_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

}  // namespace divgraph
