#pragma once

#include "mmpair/constructors.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mmpair::test {

struct Fixture {
  std::string name;
  MapTriple triple;
};

/// Every fixture expected to satisfy the pair relations.
inline std::vector<Fixture> passing_fixtures(bool with_octonions = true) {
  const auto sl2 = named_algebra("sl2");
  std::vector<Fixture> f{
      {"sl2-zero", zero_pair(sl2, sl2)},
      {"so3-sl2-zero", zero_pair(named_algebra("so3"), sl2)},
      {"sl2-gl2-zero", zero_pair(sl2, named_algebra("gl2"))},
  };
  for (const char* l : {"sl2", "so3", "solvable2"}) {
    const auto orbit = identity_orbit_pairs(named_algebra(l));
    const char* suffix[] = {"", "-s", "-s2"};
    for (int i = 0; i < 3; ++i) f.push_back({std::string(l) + "-identity" + suffix[i], orbit[i]});
  }
  for (const char* a : {"rationals", "m2", "ut2"}) f.push_back({std::string(a) + "-lr", lr_pair(named_algebra(a))});
  if (with_octonions) f.push_back({"octonions-lr", lr_pair(named_algebra("octonions"))});
  return f;
}

/// Small rationals p/q with |p| <= 9, 1 <= q <= 6.
class RationalGen {
public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}
  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = next();
    return v;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace mmpair::test
