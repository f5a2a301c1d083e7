#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/descriptor.hpp"

namespace divgraph {

/// One-line descriptor record, kind tag first:
///   heat|wave <250> v0 v1 ...      (12 significant digits, "% .11e")
///   gcd <55> u0 u1 ...             (strictly-upper GCM entries, row-major)
///   portrait <n> <sum n_c^2> <m> l k b ...   (exact integers)
std::string encode_descriptor(const Descriptor& d);

/// Inverse of encode_descriptor. Floating values come back rounded to 12
/// significant digits. Throws std::invalid_argument on malformed input.
Descriptor decode_descriptor(std::string_view record);

void write_descriptors(std::ostream& out, const std::vector<Descriptor>& descriptors);
std::vector<Descriptor> read_descriptors(std::istream& in);

}  // namespace divgraph
