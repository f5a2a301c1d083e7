#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "divgraph/measures.hpp"
#include "divgraph/space.hpp"
#include "divgraph/square_matrix.hpp"

namespace divgraph {

/// N elements with cached descriptors, pairwise distances and fitness.
template <DiversitySpace S>
class PopulationState {
 public:
  using Element = typename S::Element;
  using Desc = typename S::Descriptor;

  PopulationState(const S& space, MeasureConfig cfg, std::vector<Element> elements,
                  std::vector<Desc> descriptors)
      : space_(&space),
        cfg_(cfg),
        elements_(std::move(elements)),
        descriptors_(std::move(descriptors)),
        dist_(elements_.size()) {
    if (elements_.size() != descriptors_.size()) {
      throw std::invalid_argument("population: element and descriptor counts differ");
    }
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dist_.set_symmetric(i, j, space_->distance(descriptors_[i], descriptors_[j]));
      }
    }
    refresh_fitness();
  }

  std::size_t size() const { return elements_.size(); }
  const S& space() const { return *space_; }
  const MeasureConfig& config() const { return cfg_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& elements() const { return elements_; }
  const Desc& descriptor(std::size_t i) const { return descriptors_[i]; }
  const SquareMatrix& dist() const { return dist_; }
  double fitness(std::size_t i) const { return fitness_[i]; }
  const std::vector<double>& fitness() const { return fitness_; }

  /// Distances from a descriptor to every current element, in index order.
  std::vector<double> distances_to(const Desc& d) const {
    std::vector<double> row(size());
    for (std::size_t j = 0; j < size(); ++j) row[j] = space_->distance(d, descriptors_[j]);
    return row;
  }

  /// Swap element i for a new one whose distances to the current elements
  /// are `row` (row[i] is ignored).
  void replace(std::size_t i, Element e, Desc d, std::span<const double> row) {
    elements_[i] = std::move(e);
    descriptors_[i] = std::move(d);
    for (std::size_t j = 0; j < size(); ++j) {
      if (j != i) dist_.set_symmetric(i, j, row[j]);
    }
    dist_(i, i) = 0.0;
    refresh_fitness();
  }

  void replace(std::size_t i, Element e, Desc d) {
    const auto row = distances_to(d);
    replace(i, std::move(e), std::move(d), row);
  }

  double diversity() const { return divgraph::diversity(cfg_, dist_); }
  double energy_penalty() const { return divgraph::energy_penalty(dist_, cfg_.epsilon); }

  friend bool operator==(const PopulationState& a, const PopulationState& b) {
    return a.elements_ == b.elements_ && a.dist_ == b.dist_ && a.fitness_ == b.fitness_;
  }

 private:
  void refresh_fitness() {
    fitness_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) fitness_[i] = fitness_from_row(cfg_, dist_.row(i), i);
  }

  const S* space_;
  MeasureConfig cfg_;
  std::vector<Element> elements_;
  std::vector<Desc> descriptors_;
  SquareMatrix dist_;
  std::vector<double> fitness_;
};

}  // namespace divgraph
