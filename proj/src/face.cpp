#include "shellcert/face.hpp"

#include "shellcert/error.hpp"

namespace shellcert {

Face Face::of(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." +
                         std::to_string(kMaxVertices));
    }
    bits |= std::uint64_t{1} << (v - 1);
  }
  return Face(bits);
}

Face Face::range(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("vertex range " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxVertices));
  }
  return Face(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Face::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace shellcert
