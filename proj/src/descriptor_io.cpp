#include "divgraph/descriptor_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace divgraph {

namespace {

void append_real(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), " % .11e", x);
  out += buf;
}

template <class Array>
void read_reals(std::istringstream& in, Array& values, std::string_view kind) {
  std::size_t count = 0;
  if (!(in >> count) || count != values.size()) {
    throw std::invalid_argument(std::string(kind) + " record: expected " +
                                std::to_string(values.size()) + " values");
  }
  for (auto& v : values) {
    if (!(in >> v)) throw std::invalid_argument(std::string(kind) + " record: truncated values");
  }
}

}  // namespace

std::string encode_descriptor(const Descriptor& d) {
  std::string out(to_string(d.kind()));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Portrait>) {
          out += ' ' + std::to_string(x.node_count()) + ' ' +
                 std::to_string(x.pair_normalization()) + ' ' + std::to_string(x.entries().size());
          for (const auto& e : x.entries()) {
            out += ' ' + std::to_string(e.l) + ' ' + std::to_string(e.k) + ' ' +
                   std::to_string(e.count);
          }
        } else if constexpr (std::is_same_v<T, GraphletCorrelationMatrix>) {
          out += ' ' + std::to_string(x.upper().size());
          for (double v : x.upper()) append_real(out, v);
        } else {
          out += ' ' + std::to_string(x.values.size());
          for (double v : x.values) append_real(out, v);
        }
      },
      d.value());
  return out;
}

Descriptor decode_descriptor(std::string_view record) {
  std::istringstream in{std::string(record)};
  std::string tag;
  if (!(in >> tag)) throw std::invalid_argument("empty descriptor record");
  const DescriptorKind kind = parse_descriptor_kind(tag);
  switch (kind) {
    case DescriptorKind::Heat: {
      HeatSignature s;
      read_reals(in, s.values, tag);
      return Descriptor(s);
    }
    case DescriptorKind::Wave: {
      WaveSignature s;
      read_reals(in, s.values, tag);
      return Descriptor(s);
    }
    case DescriptorKind::Gcd: {
      GraphletCorrelationMatrix m;
      auto upper = m.upper();
      read_reals(in, upper, tag);
      return Descriptor(m);
    }
    case DescriptorKind::Portrait: {
      std::size_t n = 0, count = 0;
      std::uint64_t norm = 0;
      if (!(in >> n >> norm >> count) || n == 0) {
        throw std::invalid_argument("portrait record: bad header");
      }
      std::vector<Portrait::Entry> entries(count);
      for (auto& e : entries) {
        if (!(in >> e.l >> e.k >> e.count)) {
          throw std::invalid_argument("portrait record: truncated entries");
        }
      }
      return Descriptor(Portrait(n, std::move(entries), norm));
    }
  }
  throw std::invalid_argument("unknown descriptor kind");
}

void write_descriptors(std::ostream& out, const std::vector<Descriptor>& descriptors) {
  for (const auto& d : descriptors) out << encode_descriptor(d) << '\n';
}

std::vector<Descriptor> read_descriptors(std::istream& in) {
  std::vector<Descriptor> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(decode_descriptor(line));
  }
  return out;
}

}  // namespace divgraph
