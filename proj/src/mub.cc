#include "kings/mub.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kings {

double orthonormality_deviation(const OrthonormalBasis &basis) {
    double worst = 0.0;
    for (std::size_t j = 0; j < basis.states.size(); ++j) {
        for (std::size_t k = j; k < basis.states.size(); ++k) {
            double target = j == k ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(basis[j], basis[k]) - target));
        }
    }
    return worst;
}

bool is_orthonormal(const OrthonormalBasis &basis, double tolerance) {
    return orthonormality_deviation(basis) <= tolerance;
}

MubFamily::MubFamily(std::size_t dim, std::vector<OrthonormalBasis> bases)
    : dim_(dim), bases_(std::move(bases)) {
    if (dim_ == 0) {
        throw std::invalid_argument("MubFamily: dimension must be positive");
    }
    for (std::size_t b = 0; b < bases_.size(); ++b) {
        const auto &basis = bases_[b];
        if (basis.label != static_cast<int>(b)) {
            throw std::invalid_argument("MubFamily: basis labels must be 0..n-1 in order");
        }
        if (basis.states.size() != dim_) {
            throw std::invalid_argument("MubFamily: basis " + std::to_string(b) + " has " +
                                        std::to_string(basis.states.size()) + " states");
        }
        for (const auto &s : basis.states) {
            if (s.dim() != dim_) {
                throw std::invalid_argument("MubFamily: state dimension mismatch");
            }
        }
    }
}

const OrthonormalBasis &MubFamily::basis(int label) const {
    if (label < 0 || static_cast<std::size_t>(label) >= bases_.size()) {
        throw std::out_of_range("MubFamily: no basis with label " + std::to_string(label));
    }
    return bases_[static_cast<std::size_t>(label)];
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

namespace {

OrthonormalBasis computational_basis(std::size_t d) {
    OrthonormalBasis basis{0, {}};
    for (std::size_t j = 0; j < d; ++j) {
        basis.states.push_back(StateVector::basis_state(d, j));
    }
    return basis;
}

MubFamily qubit_family() {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i{0.0, 1.0};
    std::vector<OrthonormalBasis> bases;
    bases.push_back(computational_basis(2));
    bases.push_back({1,
                     {StateVector::from_amplitudes({r, r}),
                      StateVector::from_amplitudes({r, -r})}});
    bases.push_back({2,
                     {StateVector::from_amplitudes({r, r * i}),
                      StateVector::from_amplitudes({r, -r * i})}});
    return MubFamily(2, std::move(bases));
}

// Basis m (1..d), state j, component k: d^{-1/2} w^{jk + m k^2}.
MubFamily odd_prime_family(int d) {
    const auto ud = static_cast<std::size_t>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<OrthonormalBasis> bases;
    bases.push_back(computational_basis(ud));
    for (int m = 1; m <= d; ++m) {
        OrthonormalBasis basis{m, {}};
        for (int j = 0; j < d; ++j) {
            std::vector<Complex> amps(ud);
            for (int k = 0; k < d; ++k) {
                // Reduce the exponent mod d before forming the angle.
                long long e = (static_cast<long long>(j) * k + static_cast<long long>(m) * k * k) % d;
                amps[static_cast<std::size_t>(k)] =
                    std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) / d);
            }
            basis.states.push_back(StateVector::from_amplitudes(std::move(amps)));
        }
        bases.push_back(std::move(basis));
    }
    return MubFamily(ud, std::move(bases));
}

}  // namespace

std::array<std::array<Quadruple, 4>, 5> two_qubit_quadruples() {
    const Complex o{1.0, 0.0};
    const Complex i{0.0, 1.0};
    // clang-format off
    return {{
        // Z1, 1Z
        {{{o, 0, 0, 0}, {0, o, 0, 0}, {0, 0, o, 0}, {0, 0, 0, o}}},
        // X1, 1X
        {{{o, o, o, o}, {o, -o, o, -o}, {o, o, -o, -o}, {o, -o, -o, o}}},
        // Y1, 1Y
        {{{o, i, i, -o}, {o, -i, i, o}, {o, i, -i, o}, {o, -i, -i, -o}}},
        // XY, YZ
        {{{o, -o, i, i}, {o, o, -i, i}, {o, o, i, -i}, {o, -o, -i, -i}}},
        // YX, ZY
        {{{o, i, -o, i}, {o, -i, o, i}, {o, i, o, -i}, {o, -i, -o, -i}}},
    }};
    // clang-format on
}

MubFamily family_from_quadruples(const std::array<std::array<Quadruple, 4>, 5> &rows) {
    std::vector<OrthonormalBasis> bases;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        OrthonormalBasis basis{static_cast<int>(r), {}};
        // Row 0 is already normalized; the others carry a factor 1/2.
        double scale = r == 0 ? 1.0 : 0.5;
        for (const auto &q : rows[r]) {
            std::vector<Complex> amps(q.begin(), q.end());
            for (auto &c : amps) {
                c *= scale;
            }
            basis.states.push_back(StateVector::from_amplitudes(std::move(amps)));
        }
        bases.push_back(std::move(basis));
    }
    return MubFamily(4, std::move(bases));
}

MubFamily construct_mub(int d) {
    if (d == 2) {
        return qubit_family();
    }
    if (d == 4) {
        return family_from_quadruples(two_qubit_quadruples());
    }
    if (is_prime(d)) {
        return odd_prime_family(d);
    }
    throw std::invalid_argument("unsupported dimension " + std::to_string(d) +
                                ": need a prime or 4");
}

std::string CertificationReport::summary() const {
    std::ostringstream out;
    out << "d=" << dim << " orthonormality=" << max_orthonormality_deviation << " (basis "
        << orthonormality_site.basis_a << " states " << orthonormality_site.state_a << ","
        << orthonormality_site.state_b << ") unbiasedness=" << max_unbiasedness_deviation
        << " (basis " << unbiasedness_site.basis_a << " state " << unbiasedness_site.state_a
        << " vs basis " << unbiasedness_site.basis_b << " state " << unbiasedness_site.state_b
        << ") " << (passed ? "PASS" : "FAIL");
    return out.str();
}

CertificationReport certify_family(const MubFamily &family, double tolerance) {
    CertificationReport report;
    report.dim = family.dim();
    const double target = 1.0 / static_cast<double>(family.dim());
    const auto &bases = family.bases();
    for (std::size_t a = 0; a < bases.size(); ++a) {
        for (std::size_t b = a; b < bases.size(); ++b) {
            for (std::size_t j = 0; j < family.dim(); ++j) {
                for (std::size_t k = (a == b ? j : 0); k < family.dim(); ++k) {
                    Complex ov = inner(bases[a][j], bases[b][k]);
                    DeviationSite site{static_cast<int>(a), static_cast<int>(j),
                                       static_cast<int>(b), static_cast<int>(k)};
                    if (a == b) {
                        double dev = std::abs(ov - (j == k ? 1.0 : 0.0));
                        if (dev > report.max_orthonormality_deviation) {
                            report.max_orthonormality_deviation = dev;
                            report.orthonormality_site = site;
                        }
                    } else {
                        double dev = std::abs(std::norm(ov) - target);
                        if (dev > report.max_unbiasedness_deviation) {
                            report.max_unbiasedness_deviation = dev;
                            report.unbiasedness_site = site;
                        }
                    }
                }
            }
        }
    }
    report.passed = family.size() == family.dim() + 1 &&
                    report.max_orthonormality_deviation < tolerance &&
                    report.max_unbiasedness_deviation < tolerance;
    return report;
}

}  // namespace kings
