#include "kings/random.h"

#include <cmath>
#include <numbers>
#include <vector>

namespace kings {

std::uint64_t Rng::below(std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

double Rng::normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::vector<Complex> gaussian_vector(std::size_t dim, Rng &rng) {
    std::vector<Complex> v(dim);
    for (auto &c : v) {
        double re = rng.normal();
        double im = rng.normal();
        c = Complex{re, im};
    }
    return v;
}

}  // namespace

StateVector random_state(std::size_t dim, Rng &rng) {
    return StateVector::normalized(gaussian_vector(dim, rng));
}

OrthonormalBasis random_basis(std::size_t dim, Rng &rng, int label) {
    std::vector<std::vector<Complex>> columns;
    for (std::size_t k = 0; k < dim; ++k) {
        columns.push_back(gaussian_vector(dim, rng));
    }
    return OrthonormalBasis{label, gram_schmidt(std::move(columns))};
}

}  // namespace kings
