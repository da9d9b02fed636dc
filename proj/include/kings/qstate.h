#ifndef KINGS_QSTATE_H
#define KINGS_QSTATE_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "kings/tolerances.h"

namespace kings {

using Complex = std::complex<double>;

/// Unnormalized inner product <a|b>, conjugating the first argument.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);

/// Euclidean norm of a raw amplitude sequence.
double norm(std::span<const Complex> amps);

/// A pure state of a d-level system.
///
/// Amplitudes always have unit norm to within `Tolerances::construction`.
/// States are compared as rays: see `same_ray`.
class StateVector {
  public:
    /// Takes amplitudes that must already be normalized; throws
    /// std::invalid_argument otherwise.
    static StateVector from_amplitudes(std::vector<Complex> amps,
                                       double tolerance = kDefaultTolerances.construction);
    /// Rescales the amplitudes to unit norm; throws on a zero or non-finite vector.
    static StateVector normalized(std::vector<Complex> amps);
    /// Computational basis state |index> of dimension dim.
    static StateVector basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex operator[](std::size_t k) const { return amps_[k]; }

    StateVector with_phase(Complex phase) const;

  private:
    explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}
    std::vector<Complex> amps_;
};

/// Unit vector on the Bloch sphere.
class BlochDirection {
  public:
    /// Validates |n| = 1 within the construction tolerance.
    BlochDirection(double x, double y, double z);
    /// Normalizes an arbitrary non-zero vector.
    static BlochDirection normalized(double x, double y, double z);
    /// Polar angle theta from +z, azimuth phi from +x.
    static BlochDirection from_angles(double theta, double phi);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    double theta() const;
    double phi() const;

    BlochDirection operator-() const { return BlochDirection(-x_, -y_, -z_, Unchecked{}); }
    double dot(const BlochDirection &other) const;

  private:
    struct Unchecked {};
    BlochDirection(double x, double y, double z, Unchecked) : x_(x), y_(y), z_(z) {}
    double x_, y_, z_;
};

/// <a|b>; throws std::invalid_argument on dimension mismatch.
Complex inner(const StateVector &a, const StateVector &b);

/// |<outcome|state>|^2, clamped into [0, 1].
double born_probability(const StateVector &state, const StateVector &outcome);

/// True when |<a|b>| = 1 within tolerance (equality up to a global phase).
bool same_ray(const StateVector &a, const StateVector &b,
              double tolerance = kDefaultTolerances.comparison);

/// +1 eigenvector of n.sigma, as (cos(theta/2), e^{i phi} sin(theta/2)).
StateVector spin_up_state(const BlochDirection &n);

/// Kronecker product; index = k_a * b.dim() + k_b.
StateVector tensor(const StateVector &a, const StateVector &b);

/// Orthonormalizes `vectors` in order by modified Gram-Schmidt.
/// Throws if they are linearly dependent.
std::vector<StateVector> gram_schmidt(std::vector<std::vector<Complex>> vectors);

}  // namespace kings

#endif
