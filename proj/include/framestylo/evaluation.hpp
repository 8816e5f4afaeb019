#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "framestylo/classifier.hpp"
#include "framestylo/selection.hpp"

namespace framestylo {

struct PaintingResult {
    std::string id;
    Label truth = Label::NonVg;
    Label predicted = Label::NonVg;
    double distance = 0.0;
    std::vector<std::size_t> selected;  // fold's feature indices, in order
};

struct Metrics {
    std::size_t tp = 0;
    std::size_t tn = 0;
    double tpr = 0.0;
    double tnr = 0.0;
    double accuracy = 0.0;
};

struct EvaluationReport {
    std::vector<PaintingResult> per_painting;
    Metrics metrics;
};

struct LoocvOptions {
    std::size_t k = 5;
    std::optional<std::vector<std::size_t>> fixed_features;
    bool skip_constant_columns = false;
};

// One cross-validation fold: the model fitted with `holdout` left out.
struct FoldModel {
    TrainedClassifier model;
    FeatureSet features;
};

Metrics metrics(std::size_t tp, std::size_t tn, std::size_t vg_count,
                std::size_t nvg_count);

FoldModel fold_model(const TrainingSet& dataset, std::size_t holdout,
                     const LoocvOptions& options = {});

EvaluationReport loocv(const TrainingSet& dataset,
                       const LoocvOptions& options = {});

struct BootstrapOptions {
    std::size_t b = 200;
    std::uint64_t seed = 0;
    std::size_t k = 5;
    std::optional<std::vector<std::size_t>> fixed_features;
    bool skip_constant_columns = false;
};

struct BootstrapReport {
    std::uint64_t seed = 0;
    std::size_t b = 0;
    std::vector<double> accuracies;  // in dataset order, not sorted
    double mean = 0.0;
    double median = 0.0;
    double std = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Dataset `index` of the run seeded with `seed`: each class resampled with
// replacement, preserving the class counts. Exposed for testing.
TrainingSet bootstrap_resample(const TrainingSet& dataset, std::uint64_t seed,
                               std::size_t index);

// Mean/median/std and the order-statistic confidence interval
// (ceil(0.03 B)-th smallest, ceil(0.975 B)-th smallest).
BootstrapReport summarize_accuracies(const std::vector<double>& accuracies,
                                     std::uint64_t seed);

BootstrapReport bootstrap(const TrainingSet& dataset,
                          const BootstrapOptions& options);

} // namespace framestylo
