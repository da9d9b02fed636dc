#ifndef KINGS_STRATEGY_H
#define KINGS_STRATEGY_H

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kings/mub.h"

namespace kings {

/// Squared overlaps f[label][j][k] = |<chi_k|psi_j^label>|^2 between family
/// states and a control basis. Every label of the family is filled.
using OverlapTable = std::vector<std::vector<std::vector<double>>>;

OverlapTable overlap_table(const MubFamily &family, const OrthonormalBasis &control);

/// Maps family states to control outcomes for the bases the control
/// measurement is used on. Indices are 0-based throughout.
class AssignmentMap {
  public:
    AssignmentMap() = default;
    /// `forward[label]` lists the control index for each state of that basis,
    /// or is empty when the basis is not covered.
    AssignmentMap(std::size_t dim, std::vector<std::vector<int>> forward);

    std::size_t dim() const { return dim_; }
    std::size_t num_labels() const { return forward_.size(); }
    bool covers(int label) const;
    std::vector<int> covered_labels() const;

    /// Control index signalled by |psi_state^label>.
    int forward(int label, int state) const;
    const std::vector<int> &forward_row(int label) const;

    /// True when every covered basis maps bijectively onto 0..d-1.
    bool well_conditioned() const;
    bool bijective(int label) const;

    /// State of `label` predicted when control outcome `control` occurs.
    /// Requires the basis to be bijective.
    int prediction(int control, int label) const;

    bool operator==(const AssignmentMap &) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<std::vector<int>> forward_;
};

/// Sends each state of every basis other than `excluded` to the control state
/// it overlaps most; ties go to the lowest control index. May be
/// ill-conditioned.
AssignmentMap assign_greedy(const MubFamily &family, int excluded, const OrthonormalBasis &control);

/// Greedy assignment restricted to the given labels.
AssignmentMap assign_greedy(const OverlapTable &overlaps, const std::vector<int> &labels);

/// Replaces every non-bijective basis row with the bijection maximizing
/// sum_j f(i, j). Bijective rows are left alone.
AssignmentMap repair_well_conditioned(const AssignmentMap &raw, const OverlapTable &overlaps);

/// Best bijection j -> k for a d x d weight matrix. Exhaustive for d <= 8
/// (lexicographically first maximizer), Hungarian method above that.
std::vector<int> best_bijection(const std::vector<std::vector<double>> &weights);

/// A physicist strategy without ancilla: prepare one state, measure the control
/// basis, and read predictions off the assignment.
struct ConventionalStrategy {
    MubFamily family;
    StateVector preparation;
    std::optional<int> prep_basis;
    int prep_index = 0;
    OrthonormalBasis control;
    AssignmentMap assignment;
};

/// Prepares |psi_prep_index^prep_basis>, builds the greedy assignment and
/// repairs it. Throws if `control` is not orthonormal.
ConventionalStrategy make_strategy(MubFamily family, int prep_basis, int prep_index,
                                   OrthonormalBasis control);

/// Validates the ConventionalStrategy invariants; throws std::invalid_argument.
void validate(const ConventionalStrategy &s);

struct SuccessBreakdown {
    std::size_t dim = 0;
    double total = 0.0;
    /// Success given the king picks each basis.
    std::map<int, double> per_basis;
    /// F(k) for each control outcome.
    std::vector<double> per_signal;
    /// Total recomputed from the F(k) regrouping.
    double total_regrouped = 0.0;
};

/// Exact success of an eigenstate-prepared conventional strategy.
/// Throws std::invalid_argument when `prep_basis` is unset.
SuccessBreakdown success_exact(const ConventionalStrategy &s);

/// Most general single-round strategy: arbitrary preparation, outright
/// guesses for some bases, control measurement for the rest.
struct GeneralStrategy {
    MubFamily family;
    /// The preparation is `preparation_basis[preparation_index]`; the basis
    /// need not belong to the family.
    OrthonormalBasis preparation_basis;
    int preparation_index = 0;
    /// Guessed state index per guessed family label.
    std::map<int, int> guesses;
    OrthonormalBasis control;
    AssignmentMap assignment;

    const StateVector &preparation() const { return preparation_basis[preparation_index]; }
};

/// The conventional strategy as a general one (guess only the prep basis).
GeneralStrategy to_general(const ConventionalStrategy &s);

/// sum over guessed bases of |<guess|prep>|^2/(d+1) plus, for every covered
/// basis, sum_j p(i,j) f(i,j)/(d+1). Throws if guesses and covered bases do
/// not partition the labels.
double success_exact_general(const GeneralStrategy &g);

/// Exchanges the roles of preparation and control: prepares control state
/// `outcome`, measures in the former preparation basis, and guesses the
/// bases the control used to cover.
GeneralStrategy complement_strategy(const GeneralStrategy &g, int outcome = 0);
GeneralStrategy complement_strategy(const ConventionalStrategy &s, int outcome = 0);

}  // namespace kings

#endif
