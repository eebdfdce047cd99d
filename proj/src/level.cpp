#include "circunit/level.hpp"

#include <string>

#include "circunit/errors.hpp"

namespace circunit {

Level::Level(int n) : n_(n) {
  if (n < kMin || n > kMax) {
    throw InvalidLevel("n = " + std::to_string(n) + " outside [" + std::to_string(kMin) + ", " +
                       std::to_string(kMax) + "]");
  }
}

std::int64_t Level::reduce(std::int64_t e) const { return floor_mod(e, order()); }

void require_same(const Level& a, const Level& b) {
  if (a != b) {
    throw LevelMismatch("n = " + std::to_string(a.n()) + " vs n = " + std::to_string(b.n()));
  }
}

}  // namespace circunit
