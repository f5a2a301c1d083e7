#include "divgraph/descriptor.hpp"

#include <stdexcept>

#include "divgraph/spectrum.hpp"

namespace divgraph {

std::string_view to_string(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::Heat: return "heat";
    case DescriptorKind::Wave: return "wave";
    case DescriptorKind::Gcd: return "gcd";
    case DescriptorKind::Portrait: return "portrait";
  }
  return "?";
}

std::string_view display_name(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::Heat: return "NetLSD-heat";
    case DescriptorKind::Wave: return "NetLSD-wave";
    case DescriptorKind::Gcd: return "GCD";
    case DescriptorKind::Portrait: return "Portrait-div";
  }
  return "?";
}

DescriptorKind parse_descriptor_kind(std::string_view name) {
  if (name == "heat" || name == "netlsd-heat") return DescriptorKind::Heat;
  if (name == "wave" || name == "netlsd-wave") return DescriptorKind::Wave;
  if (name == "gcd") return DescriptorKind::Gcd;
  if (name == "portrait" || name == "portrait-div") return DescriptorKind::Portrait;
  throw std::invalid_argument("unknown descriptor kind '" + std::string(name) +
                              "' (expected one of: heat, wave, gcd, portrait)");
}

DescriptorKind Descriptor::kind() const {
  switch (value_.index()) {
    case 0: return DescriptorKind::Heat;
    case 1: return DescriptorKind::Wave;
    case 2: return DescriptorKind::Gcd;
    default: return DescriptorKind::Portrait;
  }
}

Descriptor describe(DescriptorKind kind, const Graph& g) {
  switch (kind) {
    case DescriptorKind::Heat: return Descriptor(netlsd_heat(g));
    case DescriptorKind::Wave: return Descriptor(netlsd_wave(g));
    case DescriptorKind::Gcd: return Descriptor(gcm(g));
    case DescriptorKind::Portrait: return Descriptor(portrait(g));
  }
  throw std::invalid_argument("unknown descriptor kind");
}

double distance(const Descriptor& a, const Descriptor& b) {
  if (a.value().index() != b.value().index()) {
    throw std::invalid_argument("distance between descriptors of different kinds (" +
                                std::string(to_string(a.kind())) + " vs " +
                                std::string(to_string(b.kind())) + ")");
  }
  return std::visit(
      [&](const auto& x) -> double {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value());
        if constexpr (std::is_same_v<T, GraphletCorrelationMatrix>) {
          return gcd_distance(x, y);
        } else if constexpr (std::is_same_v<T, Portrait>) {
          return portrait_divergence(x, y);
        } else {
          return netlsd_distance(x, y);
        }
      },
      a.value());
}

}  // namespace divgraph
