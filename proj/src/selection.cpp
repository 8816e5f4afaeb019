#include "framestylo/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framestylo/errors.hpp"

namespace framestylo {

std::string to_string(Label label) {
    return label == Label::Vg ? "vG" : "nvG";
}

Label label_from_string(const std::string& text) {
    if (text == "vG") return Label::Vg;
    if (text == "nvG") return Label::NonVg;
    throw ValidationError("unknown label \"" + text + "\" (expected vG or nvG)");
}

std::vector<std::size_t> TrainingSet::rows_with(Label label) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) rows.push_back(i);
    }
    return rows;
}

void TrainingSet::validate() const {
    if (ids.size() != x.size() || labels.size() != x.size()) {
        throw ValidationError("training set: ids/labels/rows size mismatch");
    }
    const std::size_t width = dim();
    if (width == 0) throw ValidationError("training set: no feature columns");
    std::size_t vg = 0, nvg = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].size() != width) {
            throw ValidationError("training set: row \"" + ids[i] +
                                  "\" has inconsistent width");
        }
        for (double v : x[i]) {
            if (!std::isfinite(v)) {
                throw ValidationError("training set: non-finite value in row \"" +
                                      ids[i] + "\"");
            }
        }
        (labels[i] == Label::Vg ? vg : nvg)++;
    }
    if (vg < 2 || nvg < 1) {
        throw ValidationError("training set: need at least 2 vG and 1 nvG rows");
    }
}

NormalizedSet normalize_columns(const TrainingSet& train) {
    const std::size_t n = train.rows();
    if (n < 2) throw ValidationError("normalize_columns: need at least 2 rows");
    const std::size_t width = train.dim();

    NormalizedSet out;
    out.x = train.x;
    out.scales.assign(width, 1.0);
    out.constant_column.assign(width, false);

    for (std::size_t j = 0; j < width; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += train.x[i][j];
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = train.x[i][j] - mean;
            sq += d * d;
        }
        const double std_dev = std::sqrt(sq / static_cast<double>(n - 1));
        if (std_dev > 0.0) {
            out.scales[j] = std_dev;
            for (std::size_t i = 0; i < n; ++i) out.x[i][j] /= std_dev;
        } else {
            out.constant_column[j] = true;
        }
    }
    return out;
}

std::vector<double> vg_center(const NormalizedSet& xn,
                              const std::vector<std::size_t>& vg_rows,
                              const std::vector<std::size_t>& indices) {
    if (vg_rows.empty()) throw ValidationError("vg_center: no vG rows");
    if (indices.empty()) throw ValidationError("vg_center: empty feature set");
    std::vector<double> center(indices.size(), 0.0);
    for (std::size_t c = 0; c < indices.size(); ++c) {
        const std::size_t j = indices[c];
        double sum = 0.0;
        for (std::size_t i : vg_rows) sum += xn.x[i][j];
        center[c] = sum / static_cast<double>(vg_rows.size());
    }
    return center;
}

std::vector<double> distances(const NormalizedSet& xn,
                              const std::vector<std::size_t>& indices,
                              const std::vector<double>& center) {
    if (center.size() != indices.size()) {
        throw ValidationError("distances: center/feature-set length mismatch");
    }
    std::vector<double> out(xn.rows(), 0.0);
    for (std::size_t i = 0; i < xn.rows(); ++i) {
        double sq = 0.0;
        for (std::size_t c = 0; c < indices.size(); ++c) {
            const double d = xn.x[i][indices[c]] - center[c];
            sq += d * d;
        }
        out[i] = std::sqrt(sq);
    }
    return out;
}

namespace {

/// Shared kernel for auc(): twice the Mann-Whitney numerator, computed by an
/// ascending sweep over tied groups. Kept in integers so the result is exact.
double auc_from_order(const std::vector<double>& dists,
                      const std::vector<Label>& labels,
                      std::vector<std::size_t>& order) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dists[a] < dists[b];
    });

    std::size_t pos = 0, neg = 0;
    for (Label l : labels) (l == Label::Vg ? pos : neg)++;
    if (pos == 0 || neg == 0) {
        throw ValidationError("auc: both classes must be present");
    }

    // A vG scoring strictly below an nvG is a fully ordered pair (weight 2
    // in num2); a tie gets half credit (weight 1).
    unsigned long long num2 = 0, seen_pos = 0;
    std::size_t g = 0;
    while (g < order.size()) {
        std::size_t end = g;
        unsigned long long gp = 0, gn = 0;
        while (end < order.size() && dists[order[end]] == dists[order[g]]) {
            (labels[order[end]] == Label::Vg ? gp : gn)++;
            ++end;
        }
        num2 += gn * (2 * seen_pos + gp);
        seen_pos += gp;
        g = end;
    }
    return static_cast<double>(num2) /
           (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
}

} // namespace

double auc(const std::vector<double>& dists, const std::vector<Label>& labels) {
    if (dists.size() != labels.size()) {
        throw ValidationError("auc: distances/labels length mismatch");
    }
    std::vector<std::size_t> order(dists.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return auc_from_order(dists, labels, order);
}

FeatureSet forward_select(const NormalizedSet& xn,
                          const std::vector<Label>& labels,
                          const SelectOptions& options) {
    const std::size_t n = xn.rows();
    const std::size_t width = xn.dim();
    if (labels.size() != n) {
        throw ValidationError("forward_select: labels/rows length mismatch");
    }
    if (options.k > width) {
        throw ValidationError("forward_select: k exceeds feature count");
    }

    std::vector<std::size_t> vg_rows;
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] == Label::Vg) vg_rows.push_back(i);
    }
    if (vg_rows.empty() || vg_rows.size() == n) {
        throw ValidationError("forward_select: both classes must be present");
    }

    // The center's coordinates do not depend on which other features are in
    // the set, so the per-column vG means can be fixed up front.
    std::vector<double> col_mean(width, 0.0);
    for (std::size_t j = 0; j < width; ++j) {
        double sum = 0.0;
        for (std::size_t i : vg_rows) sum += xn.x[i][j];
        col_mean[j] = sum / static_cast<double>(vg_rows.size());
    }

    std::vector<bool> taken(width, false);
    std::vector<double> base_sq(n, 0.0);  // squared distance over chosen set
    std::vector<double> cand(n, 0.0);
    std::vector<std::size_t> order(n);

    FeatureSet result;
    for (std::size_t round = 0; round < options.k; ++round) {
        double best_auc = -1.0;
        std::size_t best_j = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (taken[j]) continue;
            if (options.skip_constant_columns && xn.constant_column[j]) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = xn.x[i][j] - col_mean[j];
                cand[i] = std::sqrt(base_sq[i] + d * d);
            }
            std::iota(order.begin(), order.end(), std::size_t{0});
            const double a = auc_from_order(cand, labels, order);
            if (a > best_auc) {
                best_auc = a;
                best_j = j;
            }
        }
        if (best_j == width) {
            throw ValidationError("forward_select: no admissible candidate column");
        }
        taken[best_j] = true;
        result.indices.push_back(best_j);
        result.auc_trace.push_back(best_auc);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = xn.x[i][best_j] - col_mean[best_j];
            base_sq[i] += d * d;
        }
    }
    return result;
}

std::vector<FeatureFrequency> feature_frequencies(
    const std::vector<FeatureSet>& sets) {
    std::size_t width = 0;
    for (const FeatureSet& s : sets) {
        for (std::size_t j : s.indices) width = std::max(width, j + 1);
    }
    std::vector<std::size_t> counts(width, 0);
    for (const FeatureSet& s : sets) {
        for (std::size_t j : s.indices) counts[j]++;
    }
    std::vector<FeatureFrequency> table;
    for (std::size_t j = 0; j < width; ++j) {
        if (counts[j] > 0) table.push_back({j, counts[j]});
    }
    std::sort(table.begin(), table.end(),
              [](const FeatureFrequency& a, const FeatureFrequency& b) {
                  if (a.count != b.count) return a.count > b.count;
                  return a.index < b.index;
              });
    return table;
}

} // namespace framestylo
