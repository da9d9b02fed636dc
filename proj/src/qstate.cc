#include "kings/qstate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kings {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double norm(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const auto &c : amps) {
        acc += std::norm(c);
    }
    return std::sqrt(acc);
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps, double tolerance) {
    if (amps.empty()) {
        throw std::invalid_argument("state vector must have positive dimension");
    }
    for (const auto &c : amps) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("state vector has a non-finite amplitude");
        }
    }
    double n = norm(amps);
    if (std::abs(n * n - 1.0) > tolerance) {
        throw std::invalid_argument("state vector is not normalized (norm^2 = " +
                                    std::to_string(n * n) + ")");
    }
    return StateVector(std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amps) {
    double n = norm(amps);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    for (auto &c : amps) {
        c /= n;
    }
    return from_amplitudes(std::move(amps));
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::with_phase(Complex phase) const {
    if (std::abs(std::abs(phase) - 1.0) > kDefaultTolerances.construction) {
        throw std::invalid_argument("phase factor must have unit modulus");
    }
    std::vector<Complex> amps(amps_);
    for (auto &c : amps) {
        c *= phase;
    }
    return StateVector(std::move(amps));
}

BlochDirection::BlochDirection(double x, double y, double z) : x_(x), y_(y), z_(z) {
    double n2 = x * x + y * y + z * z;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kDefaultTolerances.construction) {
        throw std::invalid_argument("Bloch direction is not a unit vector");
    }
}

BlochDirection BlochDirection::normalized(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("cannot normalize a zero Bloch vector");
    }
    return BlochDirection(x / n, y / n, z / n);
}

BlochDirection BlochDirection::from_angles(double theta, double phi) {
    double s = std::sin(theta);
    return BlochDirection(s * std::cos(phi), s * std::sin(phi), std::cos(theta), Unchecked{});
}

double BlochDirection::theta() const { return std::acos(std::clamp(z_, -1.0, 1.0)); }

double BlochDirection::phi() const { return std::atan2(y_, x_); }

double BlochDirection::dot(const BlochDirection &other) const {
    return x_ * other.x_ + y_ * other.y_ + z_ * other.z_;
}

Complex inner(const StateVector &a, const StateVector &b) {
    return dot(a.amplitudes(), b.amplitudes());
}

double born_probability(const StateVector &state, const StateVector &outcome) {
    return std::clamp(std::norm(inner(outcome, state)), 0.0, 1.0);
}

bool same_ray(const StateVector &a, const StateVector &b, double tolerance) {
    return std::abs(std::abs(inner(a, b)) - 1.0) <= tolerance;
}

StateVector spin_up_state(const BlochDirection &n) {
    double half = 0.5 * n.theta();
    // phi is irrelevant at the poles; atan2(0, 0) = 0 keeps +z at (1, 0).
    Complex phase = std::polar(1.0, n.phi());
    return StateVector::normalized({Complex{std::cos(half), 0.0}, phase * std::sin(half)});
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps.push_back(a[i] * b[j]);
        }
    }
    return StateVector::normalized(std::move(amps));
}

std::vector<StateVector> gram_schmidt(std::vector<std::vector<Complex>> vectors) {
    std::vector<StateVector> out;
    out.reserve(vectors.size());
    for (auto &v : vectors) {
        for (const auto &u : out) {
            Complex c = dot(u.amplitudes(), v);
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] -= c * u[k];
            }
        }
        if (norm(v) < 1e-8) {
            throw std::invalid_argument("gram_schmidt: vectors are linearly dependent");
        }
        out.push_back(StateVector::normalized(std::move(v)));
    }
    return out;
}

}  // namespace kings
