#include "hamshallow/grid.hpp"

#include <cstdlib>

namespace hamshallow::grid {

std::size_t default_points() {
  static const std::size_t points = [] {
    if (const char* env = std::getenv("HAMSHALLOW_GRID_POINTS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1000) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(10000);
  }();
  return points;
}

}  // namespace hamshallow::grid
