#pragma once

#include "parahiggs/core.hpp"

#include <utility>
#include <vector>

namespace parahiggs {

// Weighted full flag at a single marked point. Indices exposed by this module are 1-based.
struct ParabolicPoint {
    WeightList weights;

    ParabolicPoint() = default;
    explicit ParabolicPoint(WeightList w) : weights(std::move(w)) {}
    int dim() const { return static_cast<int>(weights.size()); }
};

struct MatchingResult {
    std::vector<int> i_seq;
    int rank = 0;
    int r_p = 0;
};

struct StaircasePattern {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> allowed;  // (row j, col k), row-major order
    std::vector<std::pair<int, int>> marks;    // 1-entries of the generic representative
    std::vector<int> image_indices;
};

struct WeightSubset {
    std::vector<int> I;
    std::vector<int> J;
};

struct StepMaximum {
    int value = 0;
    Rational x0;  // a point realizing the maximum, never equal to a weight of either list
};

int dim_parhom_point(const ParabolicPoint& source, const ParabolicPoint& target, HomConstraint c);

MatchingResult i_sequence(const ParabolicPoint& source, const ParabolicPoint& target, bool extended);

// Value of the periodic extension alpha_{j + r m} = alpha_j + m at a 1-based extended index.
Rational extended_weight(const ParabolicPoint& target, int index);

int generic_rank(const ParabolicPoint& source, const ParabolicPoint& target);
int min_coker(const ParabolicPoint& source, const ParabolicPoint& target);

int r_p(const ParabolicPoint& source, const ParabolicPoint& target);
int r_p_stepfunction(const ParabolicPoint& source, const ParabolicPoint& target);
StepMaximum stepfunction_argmax(const ParabolicPoint& source, const ParabolicPoint& target);
int r_p_bruteforce(const ParabolicPoint& source, const ParabolicPoint& target);

// Maximum bipartite matching over the allowed cells of a rows x cols grid (1-based cells).
int max_matching(int rows, int cols, const std::vector<std::pair<int, int>>& allowed);

StaircasePattern generic_map_pattern(const ParabolicPoint& source, const ParabolicPoint& target);

WeightSubset destabilizing_weight_subset(const ParabolicPoint& source,
                                         const ParabolicPoint& target);

// sum_k (alpha_{i_k} - beta_k) over the extended greedy sequence.
Rational epsilon_recipe_point(const ParabolicPoint& source, const ParabolicPoint& target);

}  // namespace parahiggs
