#include "parahiggs/flagalg.hpp"

#include "parahiggs/errors.hpp"

#include <algorithm>
#include <functional>

namespace parahiggs {

namespace {

constexpr int kBruteForceLimit = 7;

void require_oriented(const ParabolicPoint& source, const ParabolicPoint& target) {
    if (source.dim() > target.dim())
        throw Error(ErrorKind::OrientationError,
                    "source dimension exceeds target dimension; dualize first");
}

std::vector<std::pair<int, int>> allowed_cells(const ParabolicPoint& source,
                                               const ParabolicPoint& target) {
    std::vector<std::pair<int, int>> cells;
    for (int j = 1; j <= target.dim(); ++j)
        for (int k = 1; k <= source.dim(); ++k)
            if (target.weights[j - 1] > source.weights[k - 1]) cells.emplace_back(j, k);
    return cells;
}

}  // namespace

int dim_parhom_point(const ParabolicPoint& source, const ParabolicPoint& target, HomConstraint c) {
    int count = 0;
    for (const auto& a : target.weights)
        for (const auto& b : source.weights)
            if (c == HomConstraint::Parabolic ? a >= b : a > b) ++count;
    return count;
}

Rational extended_weight(const ParabolicPoint& target, int index) {
    const int r = target.dim();
    return target.weights[(index - 1) % r] + Rational((index - 1) / r);
}

MatchingResult i_sequence(const ParabolicPoint& source, const ParabolicPoint& target, bool extended) {
    MatchingResult out;
    const int r1 = target.dim();
    if (!extended) {
        int last = 0;
        for (const auto& beta : source.weights) {
            int j = last + 1;
            while (j <= r1 && !(beta < target.weights[j - 1])) ++j;
            if (j > r1) break;
            out.i_seq.push_back(j);
            last = j;
        }
    } else {
        require_oriented(source, target);
        // Indices must stay distinct modulo r1 so each target weight is used at most once.
        std::vector<bool> used(static_cast<size_t>(r1), false);
        int last = 0;
        for (const auto& beta : source.weights) {
            int j = last + 1;
            while (used[static_cast<size_t>((j - 1) % r1)] || !(beta < extended_weight(target, j)))
                ++j;
            used[static_cast<size_t>((j - 1) % r1)] = true;
            out.i_seq.push_back(j);
            last = j;
        }
    }
    out.rank = static_cast<int>(std::count_if(out.i_seq.begin(), out.i_seq.end(),
                                              [r1](int i) { return i <= r1; }));
    out.r_p = source.dim() - out.rank;
    return out;
}

int generic_rank(const ParabolicPoint& source, const ParabolicPoint& target) {
    return i_sequence(source, target, false).rank;
}

int min_coker(const ParabolicPoint& source, const ParabolicPoint& target) {
    return target.dim() - generic_rank(source, target);
}

int r_p(const ParabolicPoint& source, const ParabolicPoint& target) {
    require_oriented(source, target);
    return source.dim() - generic_rank(source, target);
}

StepMaximum stepfunction_argmax(const ParabolicPoint& source, const ParabolicPoint& target) {
    if (source.dim() != target.dim())
        throw Error(ErrorKind::DimensionMismatch, "step-function r_p needs equal dimensions");
    auto g_at = [&](const Rational& x) {
        return static_cast<int>(std::upper_bound(source.weights.begin(), source.weights.end(), x) -
                                source.weights.begin());
    };
    StepMaximum best;
    best.value = -g_at(Rational(0));
    best.x0 = Rational(0);
    for (int j = 1; j <= target.dim(); ++j) {
        const Rational& a = target.weights[j - 1];
        // Just after a: f counts every target weight <= a.
        int value = j - g_at(a);
        if (value > best.value) {
            Rational next(1);
            if (j < target.dim()) next = target.weights[j];
            auto it = std::upper_bound(source.weights.begin(), source.weights.end(), a);
            if (it != source.weights.end()) next = min(next, *it);
            best.value = value;
            best.x0 = (a + next) / Rational(2);
        }
    }
    return best;
}

int r_p_stepfunction(const ParabolicPoint& source, const ParabolicPoint& target) {
    return stepfunction_argmax(source, target).value;
}

int max_matching(int rows, int cols, const std::vector<std::pair<int, int>>& allowed) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(cols) + 1);
    for (const auto& [j, k] : allowed) adj[static_cast<size_t>(k)].push_back(j);
    std::vector<int> row_match(static_cast<size_t>(rows) + 1, 0);
    std::vector<int> seen(static_cast<size_t>(rows) + 1, 0);
    int stamp = 0;
    std::function<bool(int)> augment = [&](int k) {
        for (int j : adj[static_cast<size_t>(k)]) {
            if (seen[static_cast<size_t>(j)] == stamp) continue;
            seen[static_cast<size_t>(j)] = stamp;
            if (row_match[static_cast<size_t>(j)] == 0 || augment(row_match[static_cast<size_t>(j)])) {
                row_match[static_cast<size_t>(j)] = k;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int k = 1; k <= cols; ++k) {
        ++stamp;
        if (augment(k)) ++size;
    }
    return size;
}

int r_p_bruteforce(const ParabolicPoint& source, const ParabolicPoint& target) {
    require_oriented(source, target);
    // The matching can be no larger than the source, so that is the dimension that is capped.
    if (source.dim() > kBruteForceLimit)
        throw Error(ErrorKind::TooLarge, "brute-force r_p limited to source dimension 7");
    return source.dim() - max_matching(target.dim(), source.dim(), allowed_cells(source, target));
}

StaircasePattern generic_map_pattern(const ParabolicPoint& source, const ParabolicPoint& target) {
    StaircasePattern p;
    p.rows = target.dim();
    p.cols = source.dim();
    p.allowed = allowed_cells(source, target);
    MatchingResult m = i_sequence(source, target, false);
    for (size_t k = 0; k < m.i_seq.size(); ++k)
        p.marks.emplace_back(m.i_seq[k], static_cast<int>(k) + 1);
    p.image_indices = m.i_seq;
    return p;
}

WeightSubset destabilizing_weight_subset(const ParabolicPoint& source,
                                         const ParabolicPoint& target) {
    require_oriented(source, target);
    WeightSubset out;
    MatchingResult m = i_sequence(source, target, false);
    out.I = m.i_seq;
    int need = m.r_p;
    for (int j = 1; j <= target.dim() && need > 0; ++j) {
        if (std::find(out.I.begin(), out.I.end(), j) != out.I.end()) continue;
        out.J.push_back(j);
        --need;
    }
    return out;
}

Rational epsilon_recipe_point(const ParabolicPoint& source, const ParabolicPoint& target) {
    MatchingResult m = i_sequence(source, target, true);
    Rational total;
    for (size_t k = 0; k < m.i_seq.size(); ++k)
        total += extended_weight(target, m.i_seq[k]) - source.weights[k];
    return total;
}

}  // namespace parahiggs
