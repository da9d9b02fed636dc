#include "kings/strategy.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace kings {

OverlapTable overlap_table(const MubFamily &family, const OrthonormalBasis &control) {
    if (control.dim() != family.dim() || control.states.size() != family.dim()) {
        throw std::invalid_argument("control basis does not match family dimension");
    }
    const std::size_t d = family.dim();
    OverlapTable table(family.size(), std::vector<std::vector<double>>(d, std::vector<double>(d)));
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                table[i][j][k] = born_probability(family.bases()[i][j], control[k]);
            }
        }
    }
    return table;
}

AssignmentMap::AssignmentMap(std::size_t dim, std::vector<std::vector<int>> forward)
    : dim_(dim), forward_(std::move(forward)) {
    for (const auto &row : forward_) {
        if (row.empty()) {
            continue;
        }
        if (row.size() != dim_) {
            throw std::invalid_argument("AssignmentMap: row length must equal the dimension");
        }
        for (int k : row) {
            if (k < 0 || static_cast<std::size_t>(k) >= dim_) {
                throw std::invalid_argument("AssignmentMap: control index out of range");
            }
        }
    }
}

bool AssignmentMap::covers(int label) const {
    return label >= 0 && static_cast<std::size_t>(label) < forward_.size() &&
           !forward_[static_cast<std::size_t>(label)].empty();
}

std::vector<int> AssignmentMap::covered_labels() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < forward_.size(); ++i) {
        if (!forward_[i].empty()) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

const std::vector<int> &AssignmentMap::forward_row(int label) const {
    if (!covers(label)) {
        throw std::out_of_range("AssignmentMap: basis " + std::to_string(label) + " not covered");
    }
    return forward_[static_cast<std::size_t>(label)];
}

int AssignmentMap::forward(int label, int state) const {
    return forward_row(label).at(static_cast<std::size_t>(state));
}

bool AssignmentMap::bijective(int label) const {
    std::vector<int> row = forward_row(label);
    std::sort(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != static_cast<int>(k)) {
            return false;
        }
    }
    return true;
}

bool AssignmentMap::well_conditioned() const {
    for (int label : covered_labels()) {
        if (!bijective(label)) {
            return false;
        }
    }
    return true;
}

int AssignmentMap::prediction(int control, int label) const {
    const auto &row = forward_row(label);
    if (!bijective(label)) {
        throw std::logic_error("AssignmentMap: basis " + std::to_string(label) +
                               " is ill-conditioned");
    }
    auto it = std::find(row.begin(), row.end(), control);
    return static_cast<int>(it - row.begin());
}

AssignmentMap assign_greedy(const OverlapTable &overlaps, const std::vector<int> &labels) {
    std::vector<std::vector<int>> forward(overlaps.size());
    std::size_t d = overlaps.empty() ? 0 : overlaps.front().size();
    for (int label : labels) {
        const auto &rows = overlaps.at(static_cast<std::size_t>(label));
        auto &out = forward[static_cast<std::size_t>(label)];
        for (const auto &f : rows) {
            // max_element returns the first maximum: ties go to the lowest index.
            out.push_back(static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin()));
        }
    }
    return AssignmentMap(d, std::move(forward));
}

AssignmentMap assign_greedy(const MubFamily &family, int excluded, const OrthonormalBasis &control) {
    std::vector<int> labels;
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        if (i != excluded) {
            labels.push_back(i);
        }
    }
    return assign_greedy(overlap_table(family, control), labels);
}

namespace {

std::vector<int> exhaustive_bijection(const std::vector<std::vector<double>> &w) {
    std::vector<int> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    double best_value = -std::numeric_limits<double>::infinity();
    do {
        double value = 0.0;
        for (std::size_t j = 0; j < perm.size(); ++j) {
            value += w[j][static_cast<std::size_t>(perm[j])];
        }
        if (value > best_value) {
            best_value = value;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Shortest augmenting path Hungarian method on cost = -weight.
std::vector<int> hungarian_bijection(const std::vector<std::vector<double>> &w) {
    const std::size_t n = w.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1), v(n + 1);
    std::vector<std::size_t> match(n + 1), way(n + 1);
    for (std::size_t row = 1; row <= n; ++row) {
        match[0] = row;
        std::size_t col0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col0] = true;
            std::size_t row0 = match[col0], col1 = 0;
            double delta = inf;
            for (std::size_t col = 1; col <= n; ++col) {
                if (used[col]) {
                    continue;
                }
                double cur = -w[row0 - 1][col - 1] - u[row0] - v[col];
                if (cur < minv[col]) {
                    minv[col] = cur;
                    way[col] = col0;
                }
                if (minv[col] < delta) {
                    delta = minv[col];
                    col1 = col;
                }
            }
            for (std::size_t col = 0; col <= n; ++col) {
                if (used[col]) {
                    u[match[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = col1;
        } while (match[col0] != 0);
        do {
            std::size_t col1 = way[col0];
            match[col0] = match[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<int> perm(n);
    for (std::size_t col = 1; col <= n; ++col) {
        perm[match[col] - 1] = static_cast<int>(col - 1);
    }
    return perm;
}

}  // namespace

std::vector<int> best_bijection(const std::vector<std::vector<double>> &weights) {
    if (weights.size() <= 8) {
        return exhaustive_bijection(weights);
    }
    return hungarian_bijection(weights);
}

AssignmentMap repair_well_conditioned(const AssignmentMap &raw, const OverlapTable &overlaps) {
    std::vector<std::vector<int>> forward(raw.num_labels());
    for (int label : raw.covered_labels()) {
        auto &row = forward[static_cast<std::size_t>(label)];
        if (raw.bijective(label)) {
            row = raw.forward_row(label);
        } else {
            row = best_bijection(overlaps.at(static_cast<std::size_t>(label)));
        }
    }
    return AssignmentMap(raw.dim(), std::move(forward));
}

void validate(const ConventionalStrategy &s) {
    const std::size_t d = s.family.dim();
    if (s.control.states.size() != d || s.control.dim() != d) {
        throw std::invalid_argument("control basis has the wrong shape");
    }
    if (!is_orthonormal(s.control)) {
        throw std::invalid_argument("control basis is not orthonormal");
    }
    if (s.preparation.dim() != d) {
        throw std::invalid_argument("preparation state has the wrong dimension");
    }
    if (s.prep_basis) {
        const auto &basis = s.family.basis(*s.prep_basis);
        if (s.prep_index < 0 || static_cast<std::size_t>(s.prep_index) >= d ||
            !same_ray(s.preparation, basis[static_cast<std::size_t>(s.prep_index)])) {
            throw std::invalid_argument("preparation is not the named state of its basis");
        }
    }
    if (!s.assignment.well_conditioned()) {
        throw std::invalid_argument("assignment is ill-conditioned");
    }
}

ConventionalStrategy make_strategy(MubFamily family, int prep_basis, int prep_index,
                                   OrthonormalBasis control) {
    StateVector prep = family.state(prep_basis, prep_index);
    OverlapTable overlaps = overlap_table(family, control);
    std::vector<int> labels;
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
        if (i != prep_basis) {
            labels.push_back(i);
        }
    }
    AssignmentMap assignment = repair_well_conditioned(assign_greedy(overlaps, labels), overlaps);
    ConventionalStrategy s{std::move(family), std::move(prep), prep_basis, prep_index,
                           std::move(control), std::move(assignment)};
    validate(s);
    return s;
}

SuccessBreakdown success_exact(const ConventionalStrategy &s) {
    if (!s.prep_basis) {
        throw std::invalid_argument(
            "success_exact needs an eigenstate preparation; use success_exact_general");
    }
    validate(s);
    const std::size_t d = s.family.dim();
    const double dd = static_cast<double>(d);
    const double weight = 1.0 / static_cast<double>(s.family.size());
    SuccessBreakdown out;
    out.dim = d;
    out.per_signal.assign(d, 0.0);
    out.total = weight;
    out.per_basis[*s.prep_basis] = 1.0;
    for (int label = 0; label < static_cast<int>(s.family.size()); ++label) {
        if (label == *s.prep_basis) {
            continue;
        }
        if (!s.assignment.covers(label)) {
            throw std::invalid_argument("assignment does not cover basis " + std::to_string(label));
        }
        double basis_success = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            int k = s.assignment.forward(label, static_cast<int>(j));
            double f = born_probability(s.family.state(label, static_cast<int>(j)),
                                        s.control[static_cast<std::size_t>(k)]);
            basis_success += f / dd;
            out.total += weight * f / dd;
            out.per_signal[static_cast<std::size_t>(k)] += f;
        }
        out.per_basis[label] = basis_success;
    }
    double sum_f = std::accumulate(out.per_signal.begin(), out.per_signal.end(), 0.0);
    out.total_regrouped = weight * (1.0 + sum_f / dd);
    return out;
}

GeneralStrategy to_general(const ConventionalStrategy &s) {
    if (!s.prep_basis) {
        throw std::invalid_argument("to_general: strategy has no preparation basis");
    }
    return GeneralStrategy{s.family,
                           s.family.basis(*s.prep_basis),
                           s.prep_index,
                           {{*s.prep_basis, s.prep_index}},
                           s.control,
                           s.assignment};
}

double success_exact_general(const GeneralStrategy &g) {
    const std::size_t labels = g.family.size();
    const std::size_t d = g.family.dim();
    for (int label = 0; label < static_cast<int>(labels); ++label) {
        bool guessed = g.guesses.contains(label);
        bool covered = g.assignment.covers(label);
        if (guessed == covered) {
            throw std::invalid_argument("basis " + std::to_string(label) +
                                        (guessed ? " is both guessed and covered"
                                                 : " is neither guessed nor covered"));
        }
    }
    for (const auto &[label, index] : g.guesses) {
        if (label < 0 || static_cast<std::size_t>(label) >= labels) {
            throw std::invalid_argument("guess for unknown basis " + std::to_string(label));
        }
        if (index < 0 || static_cast<std::size_t>(index) >= d) {
            throw std::invalid_argument("guessed state index out of range");
        }
    }
    if (!g.assignment.well_conditioned()) {
        throw std::invalid_argument("assignment is ill-conditioned");
    }
    if (!is_orthonormal(g.control)) {
        throw std::invalid_argument("control basis is not orthonormal");
    }
    const StateVector &prep = g.preparation();
    const double weight = 1.0 / static_cast<double>(labels);
    double total = 0.0;
    for (const auto &[label, index] : g.guesses) {
        total += weight * born_probability(prep, g.family.state(label, index));
    }
    for (int label : g.assignment.covered_labels()) {
        for (std::size_t j = 0; j < d; ++j) {
            const StateVector &psi = g.family.state(label, static_cast<int>(j));
            double p = born_probability(prep, psi);
            int k = g.assignment.forward(label, static_cast<int>(j));
            double f = born_probability(psi, g.control[static_cast<std::size_t>(k)]);
            total += weight * p * f;
        }
    }
    return total;
}

GeneralStrategy complement_strategy(const GeneralStrategy &g, int outcome) {
    const std::size_t d = g.family.dim();
    if (outcome < 0 || static_cast<std::size_t>(outcome) >= d) {
        throw std::invalid_argument("complement_strategy: outcome out of range");
    }
    std::map<int, int> guesses;
    for (int label : g.assignment.covered_labels()) {
        guesses[label] = g.assignment.prediction(outcome, label);
    }
    std::vector<int> covered;
    for (const auto &[label, index] : g.guesses) {
        covered.push_back(label);
    }
    OverlapTable overlaps = overlap_table(g.family, g.preparation_basis);
    AssignmentMap assignment = repair_well_conditioned(assign_greedy(overlaps, covered), overlaps);
    return GeneralStrategy{g.family, g.control, outcome, std::move(guesses), g.preparation_basis,
                           std::move(assignment)};
}

GeneralStrategy complement_strategy(const ConventionalStrategy &s, int outcome) {
    return complement_strategy(to_general(s), outcome);
}

}  // namespace kings
