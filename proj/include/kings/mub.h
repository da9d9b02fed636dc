#ifndef KINGS_MUB_H
#define KINGS_MUB_H

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kings/qstate.h"

namespace kings {

/// A labeled orthonormal basis. Orthonormality is checked by `certify_family`
/// (or `is_orthonormal`), not on construction, so faulty bases can be studied.
struct OrthonormalBasis {
    int label = 0;
    std::vector<StateVector> states;

    std::size_t dim() const { return states.empty() ? 0 : states.front().dim(); }
    const StateVector &operator[](std::size_t j) const { return states[j]; }
};

/// Largest |<s_j|s_k> - delta_jk| over the basis.
double orthonormality_deviation(const OrthonormalBasis &basis);
bool is_orthonormal(const OrthonormalBasis &basis,
                    double tolerance = kDefaultTolerances.construction);

/// d + 1 bases of a d-level system. Basis 0 is the computational basis and
/// serves as the preparation basis by convention.
class MubFamily {
  public:
    MubFamily(std::size_t dim, std::vector<OrthonormalBasis> bases);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return bases_.size(); }
    const OrthonormalBasis &basis(int label) const;
    const std::vector<OrthonormalBasis> &bases() const { return bases_; }
    /// |psi_state^label>
    const StateVector &state(int label, int index) const { return basis(label)[index]; }

  private:
    std::size_t dim_;
    std::vector<OrthonormalBasis> bases_;
};

bool is_prime(int n);

/// Builds a complete family: Z/X/Y eigenbases for d = 2, the quadratic
/// root-of-unity family for odd prime d, and the two-qubit Pauli family for
/// d = 4. Throws std::invalid_argument for any other dimension.
MubFamily construct_mub(int d);

/// One unnormalized two-qubit state written as amplitudes of |00>,|01>,|10>,|11>.
using Quadruple = std::array<Complex, 4>;

/// The 5 x 4 unnormalized entries of the d = 4 family, rows ordered
/// Z1/1Z, X1/1X, Y1/1Y, XY/YZ, YX/ZY and states by eigenvalue signature
/// ++, +-, -+, --.
std::array<std::array<Quadruple, 4>, 5> two_qubit_quadruples();

/// Family from quadruples scaled by 1/2 (no orthogonality check).
MubFamily family_from_quadruples(const std::array<std::array<Quadruple, 4>, 5> &rows);

/// Location of the worst violation found during certification.
struct DeviationSite {
    int basis_a = -1;
    int state_a = -1;
    int basis_b = -1;
    int state_b = -1;
};

struct CertificationReport {
    std::size_t dim = 0;
    double max_orthonormality_deviation = 0.0;
    DeviationSite orthonormality_site;
    double max_unbiasedness_deviation = 0.0;
    DeviationSite unbiasedness_site;
    bool passed = false;

    std::string summary() const;
};

/// Checks every pair of states within and across bases. Never throws on a
/// bad family; failures are reported.
CertificationReport certify_family(const MubFamily &family,
                                   double tolerance = kDefaultTolerances.comparison);

}  // namespace kings

#endif
