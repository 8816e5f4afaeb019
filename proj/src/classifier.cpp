#include "framestylo/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "framestylo/errors.hpp"

namespace framestylo {

ThresholdFit fit_threshold(const std::vector<double>& dists,
                           const std::vector<Label>& labels) {
    const std::size_t n = dists.size();
    if (labels.size() != n) {
        throw ValidationError("fit_threshold: distances/labels length mismatch");
    }
    std::size_t total_vg = 0;
    for (Label l : labels) {
        if (l == Label::Vg) ++total_vg;
    }
    if (total_vg == 0 || total_vg == n) {
        throw ValidationError("fit_threshold: both classes must be present");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return dists[a] < dists[b];
    });
    std::vector<double> e(n);
    std::vector<Label> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = dists[order[i]];
        b[i] = labels[order[i]];
    }

    // Cut j (1-based, 1..n+1) predicts vG for sorted positions before j and
    // nvG from j on. Its accuracy is (vG below + nvG at-or-above)/n. Cuts
    // inside a run of tied distances are skipped: no midpoint threshold can
    // realize them under the strict d < threshold rule. The highest-scoring
    // cut wins, ties going to the largest j.
    std::size_t vg_below = 0;
    std::size_t best_j = 0;
    std::size_t best_correct = 0;
    for (std::size_t j = 1; j <= n + 1; ++j) {
        if (j >= 2) vg_below += (b[j - 2] == Label::Vg) ? 1 : 0;
        if (j >= 2 && j <= n && !(e[j - 2] < e[j - 1])) continue;
        const std::size_t nvg_above = (n - total_vg) - ((j - 1) - vg_below);
        const std::size_t correct = vg_below + nvg_above;
        if (best_j == 0 || correct >= best_correct) {
            best_correct = correct;
            best_j = j;
        }
    }

    const double lo = (best_j == 1) ? 0.0 : e[best_j - 2];
    const double hi = (best_j == n + 1) ? e[n - 1] + 1.0 : e[best_j - 1];
    ThresholdFit fit;
    fit.threshold = (lo + hi) / 2.0;
    fit.training_accuracy =
        static_cast<double>(best_correct) / static_cast<double>(n);
    return fit;
}

TrainedClassifier train(const NormalizedSet& xn,
                        const std::vector<Label>& labels,
                        const FeatureSet& features) {
    if (features.indices.empty()) {
        throw ValidationError("train: empty feature set");
    }
    std::vector<std::size_t> vg_rows;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == Label::Vg) vg_rows.push_back(i);
    }

    TrainedClassifier model;
    model.feature_indices = features.indices;
    model.center = vg_center(xn, vg_rows, features.indices);
    model.scales.reserve(features.indices.size());
    for (std::size_t j : features.indices) {
        if (j >= xn.dim()) throw ValidationError("train: feature index out of range");
        model.scales.push_back(xn.scales[j]);
    }
    model.source_dim = xn.dim();

    const std::vector<double> d = distances(xn, features.indices, model.center);
    const ThresholdFit fit = fit_threshold(d, labels);
    model.threshold = fit.threshold;
    model.training_accuracy = fit.training_accuracy;
    return model;
}

Classification classify(const TrainedClassifier& model,
                        const FeatureVector& raw_features) {
    if (raw_features.size() != model.source_dim) {
        throw ValidationError("classify: feature vector length mismatch");
    }
    double sq = 0.0;
    for (std::size_t c = 0; c < model.feature_indices.size(); ++c) {
        const double v = raw_features[model.feature_indices[c]] / model.scales[c];
        const double d = v - model.center[c];
        sq += d * d;
    }
    Classification result;
    result.distance = std::sqrt(sq);
    result.label = result.distance < model.threshold ? Label::Vg : Label::NonVg;
    return result;
}

} // namespace framestylo
