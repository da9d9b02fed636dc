#ifndef KINGS_RANDOM_H
#define KINGS_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

#include "kings/mub.h"
#include "kings/qstate.h"

namespace kings {

/// Seeded generator with a platform-independent stream.
///
/// Only the raw mt19937_64 output is used; the conversions to doubles are
/// done here because std distributions differ between standard libraries.
class Rng {
  public:
    static constexpr std::string_view kName = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Standard normal via Box-Muller.
    double normal();

  private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent child seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Haar-random pure state.
StateVector random_state(std::size_t dim, Rng &rng);

/// Haar-random orthonormal basis (Gram-Schmidt of complex Gaussian vectors).
OrthonormalBasis random_basis(std::size_t dim, Rng &rng, int label = 0);

}  // namespace kings

#endif
