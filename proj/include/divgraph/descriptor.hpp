#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divgraph/gcm.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/netlsd.hpp"
#include "divgraph/portrait.hpp"

namespace divgraph {

enum class DescriptorKind { Heat, Wave, Gcd, Portrait };

inline constexpr DescriptorKind kAllDescriptorKinds[] = {DescriptorKind::Gcd, DescriptorKind::Portrait,
                                                         DescriptorKind::Heat, DescriptorKind::Wave};

/// Canonical names: "heat", "wave", "gcd", "portrait".
std::string_view to_string(DescriptorKind kind);
/// Column titles used in report tables ("NetLSD-heat", "Portrait-div", ...).
std::string_view display_name(DescriptorKind kind);
/// Accepts the canonical names plus "netlsd-heat", "netlsd-wave", "portrait-div".
/// Throws std::invalid_argument listing the valid names.
DescriptorKind parse_descriptor_kind(std::string_view name);

/// A graph representation of one of the four kinds.
class Descriptor {
 public:
  using Value = std::variant<HeatSignature, WaveSignature, GraphletCorrelationMatrix, Portrait>;

  explicit Descriptor(Value value) : value_(std::move(value)) {}

  DescriptorKind kind() const;
  const Value& value() const { return value_; }

 private:
  Value value_;
};

Descriptor describe(DescriptorKind kind, const Graph& g);

/// Distance between descriptors of the same kind. Throws
/// std::invalid_argument on a kind mismatch.
double distance(const Descriptor& a, const Descriptor& b);

}  // namespace divgraph
