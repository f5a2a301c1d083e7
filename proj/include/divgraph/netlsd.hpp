#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "divgraph/graph.hpp"

namespace divgraph {

inline constexpr std::size_t kSignatureLength = 250;

/// Heat trace sum_j exp(-t lambda_j) at 250 log-spaced t in [1e-2, 1e2].
struct HeatSignature {
  std::array<double, kSignatureLength> values{};
};

/// Real part of the wave trace, sum_j cos(t lambda_j), at t = 2 pi i / 250.
struct WaveSignature {
  std::array<double, kSignatureLength> values{};
};

const std::array<double, kSignatureLength>& heat_timestamps();
const std::array<double, kSignatureLength>& wave_timestamps();

HeatSignature heat_signature(std::span<const double> spectrum);
WaveSignature wave_signature(std::span<const double> spectrum);

HeatSignature netlsd_heat(const Graph& g);
WaveSignature netlsd_wave(const Graph& g);

/// Euclidean distance between signatures.
double netlsd_distance(const HeatSignature& a, const HeatSignature& b);
double netlsd_distance(const WaveSignature& a, const WaveSignature& b);

}  // namespace divgraph
