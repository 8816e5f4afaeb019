#pragma once

#include <cstddef>
#include <vector>

#include "framestylo/features.hpp"
#include "framestylo/selection.hpp"

namespace framestylo {

struct ThresholdFit {
    double threshold = 0.0;
    double training_accuracy = 0.0;
};

// Distance-to-center rule over a fixed feature subset. `scales` are the
// training column standard deviations for exactly those columns, so a raw
// feature vector can be normalized the same way the training matrix was.
struct TrainedClassifier {
    std::vector<std::size_t> feature_indices;
    std::vector<double> scales;
    std::vector<double> center;
    double threshold = 0.0;
    double training_accuracy = 0.0;
    std::size_t source_dim = 0;  // full feature-vector length the model expects
};

struct Classification {
    Label label = Label::NonVg;
    double distance = 0.0;
};

// Picks the accuracy-maximizing cut through the sorted distances and returns
// the midpoint threshold. Among equally good cuts the highest one wins.
ThresholdFit fit_threshold(const std::vector<double>& dists,
                           const std::vector<Label>& labels);

TrainedClassifier train(const NormalizedSet& xn,
                        const std::vector<Label>& labels,
                        const FeatureSet& features);

// vG iff distance < threshold, strictly.
Classification classify(const TrainedClassifier& model,
                        const FeatureVector& raw_features);

} // namespace framestylo
