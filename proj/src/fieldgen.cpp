#include "ngg/fieldgen.hpp"

#include <stdexcept>
#include <string>

namespace ngg {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PlaneEncoding::PlaneEncoding(int prime) : p(prime) {
  if (!is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxFieldPrime)
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " exceeds the largest supported prime " +
                                std::to_string(kMaxFieldPrime));
}

int PlaneEncoding::index(int x1, int x2) const {
  if (x1 < 0 || x1 >= p || x2 < 0 || x2 >= p)
    throw std::out_of_range("coordinates outside F_p x F_p");
  return p * x1 + x2 + 1;
}

std::pair<int, int> PlaneEncoding::coords(int point) const {
  if (point < 1 || point > p * p)
    throw std::out_of_range("point outside {1.." + std::to_string(p * p) + "}");
  return {(point - 1) / p, (point - 1) % p};
}

Transformation projection_map(int p, int a) {
  const PlaneEncoding plane(p);
  if (a < 1 || a >= p)
    throw std::invalid_argument("a = " + std::to_string(a) +
                                " is not a nonzero residue mod " +
                                std::to_string(p));
  std::vector<int> images(static_cast<std::size_t>(plane.degree()));
  for (int point = 1; point <= plane.degree(); ++point) {
    const auto [x1, x2] = plane.coords(point);
    images[static_cast<std::size_t>(point - 1)] = plane.index(a * x1 % p, 0);
  }
  return Transformation(images);
}

std::vector<Transformation> projection_group(int p) {
  const PlaneEncoding plane(p);  // validates p
  std::vector<Transformation> maps;
  maps.reserve(static_cast<std::size_t>(p - 1));
  for (int a = 1; a < p; ++a) maps.push_back(projection_map(p, a));
  return maps;
}

}  // namespace ngg
