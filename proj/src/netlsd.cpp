#include "divgraph/netlsd.hpp"

#include <cmath>
#include <numbers>

#include "divgraph/spectrum.hpp"

namespace divgraph {

namespace {

double euclidean(const std::array<double, kSignatureLength>& a,
                 const std::array<double, kSignatureLength>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < kSignatureLength; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

const std::array<double, kSignatureLength>& heat_timestamps() {
  static const auto ts = [] {
    std::array<double, kSignatureLength> t{};
    for (std::size_t i = 0; i < kSignatureLength; ++i) {
      const double e = -2.0 + 4.0 * static_cast<double>(i) / (kSignatureLength - 1);
      t[i] = std::pow(10.0, e);
    }
    return t;
  }();
  return ts;
}

const std::array<double, kSignatureLength>& wave_timestamps() {
  static const auto ts = [] {
    std::array<double, kSignatureLength> t{};
    for (std::size_t i = 0; i < kSignatureLength; ++i) {
      t[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / kSignatureLength;
    }
    return t;
  }();
  return ts;
}

HeatSignature heat_signature(std::span<const double> spectrum) {
  HeatSignature sig;
  const auto& ts = heat_timestamps();
  for (std::size_t i = 0; i < kSignatureLength; ++i) {
    double s = 0.0;
    for (double lambda : spectrum) s += std::exp(-ts[i] * lambda);
    sig.values[i] = s;
  }
  return sig;
}

WaveSignature wave_signature(std::span<const double> spectrum) {
  WaveSignature sig;
  const auto& ts = wave_timestamps();
  for (std::size_t i = 0; i < kSignatureLength; ++i) {
    double s = 0.0;
    for (double lambda : spectrum) s += std::cos(ts[i] * lambda);
    sig.values[i] = s;
  }
  return sig;
}

HeatSignature netlsd_heat(const Graph& g) { return heat_signature(normalized_laplacian_spectrum(g)); }
WaveSignature netlsd_wave(const Graph& g) { return wave_signature(normalized_laplacian_spectrum(g)); }

double netlsd_distance(const HeatSignature& a, const HeatSignature& b) {
  return euclidean(a.values, b.values);
}
double netlsd_distance(const WaveSignature& a, const WaveSignature& b) {
  return euclidean(a.values, b.values);
}

}  // namespace divgraph
