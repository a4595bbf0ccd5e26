#include "gaplab/random.hpp"

#include "gaplab/error.hpp"

namespace gaplab {

__extension__ using Uint128 = unsigned __int128;

// Lemire's nearly-divisionless rejection method.
std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound > 0, ErrorKind::invalid_parameter, "Rng::below: bound must be positive");
  Uint128 m = static_cast<Uint128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<Uint128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace gaplab
