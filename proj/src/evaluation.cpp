#include "framestylo/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "framestylo/errors.hpp"
#include "framestylo/parallel.hpp"

namespace framestylo {

Metrics metrics(std::size_t tp, std::size_t tn, std::size_t vg_count,
                std::size_t nvg_count) {
    if (vg_count == 0 || nvg_count == 0) {
        throw ValidationError("metrics: class counts must be positive");
    }
    if (tp > vg_count || tn > nvg_count) {
        throw ValidationError("metrics: counts exceed class sizes");
    }
    Metrics m;
    m.tp = tp;
    m.tn = tn;
    m.tpr = static_cast<double>(tp) / static_cast<double>(vg_count);
    m.tnr = static_cast<double>(tn) / static_cast<double>(nvg_count);
    m.accuracy = static_cast<double>(tp + tn) /
                 static_cast<double>(vg_count + nvg_count);
    return m;
}

namespace {

TrainingSet without_row(const TrainingSet& dataset, std::size_t holdout) {
    TrainingSet fold;
    fold.ids.reserve(dataset.rows() - 1);
    fold.labels.reserve(dataset.rows() - 1);
    fold.x.reserve(dataset.rows() - 1);
    for (std::size_t i = 0; i < dataset.rows(); ++i) {
        if (i == holdout) continue;
        fold.ids.push_back(dataset.ids[i]);
        fold.labels.push_back(dataset.labels[i]);
        fold.x.push_back(dataset.x[i]);
    }
    return fold;
}

} // namespace

FoldModel fold_model(const TrainingSet& dataset, std::size_t holdout,
                     const LoocvOptions& options) {
    const TrainingSet fold = without_row(dataset, holdout);
    bool has_vg = false, has_nvg = false;
    for (Label l : fold.labels) (l == Label::Vg ? has_vg : has_nvg) = true;
    if (!has_vg || !has_nvg) {
        throw ValidationError("loocv: fold for \"" + dataset.ids[holdout] +
                              "\" leaves a single-class training set");
    }

    const NormalizedSet xn = normalize_columns(fold);
    FeatureSet features;
    if (options.fixed_features) {
        features.indices = *options.fixed_features;
    } else {
        SelectOptions select;
        select.k = options.k;
        select.skip_constant_columns = options.skip_constant_columns;
        features = forward_select(xn, fold.labels, select);
    }

    FoldModel out;
    out.model = train(xn, fold.labels, features);
    out.features = std::move(features);
    return out;
}

EvaluationReport loocv(const TrainingSet& dataset, const LoocvOptions& options) {
    dataset.validate();
    const std::size_t n = dataset.rows();
    if (n < 3) throw ValidationError("loocv: need at least 3 paintings");
    if (options.fixed_features && options.fixed_features->empty()) {
        throw ValidationError("loocv: fixed feature set is empty");
    }

    EvaluationReport report;
    report.per_painting.resize(n);
    std::vector<std::exception_ptr> failures(n);

    parallel_for(n, [&](std::size_t i) {
        try {
            const FoldModel fold = fold_model(dataset, i, options);
            const Classification c = classify(fold.model, dataset.x[i]);
            PaintingResult& row = report.per_painting[i];
            row.id = dataset.ids[i];
            row.truth = dataset.labels[i];
            row.predicted = c.label;
            row.distance = c.distance;
            row.selected = fold.features.indices;
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
    }

    std::size_t tp = 0, tn = 0, vg_count = 0, nvg_count = 0;
    for (const PaintingResult& row : report.per_painting) {
        if (row.truth == Label::Vg) {
            ++vg_count;
            if (row.predicted == Label::Vg) ++tp;
        } else {
            ++nvg_count;
            if (row.predicted == Label::NonVg) ++tn;
        }
    }
    report.metrics = metrics(tp, tn, vg_count, nvg_count);
    return report;
}

namespace {

/// splitmix64 output function; stream i gets the i+1-th output of the
/// sequence whose state starts at `seed`. Stable across platforms.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TrainingSet bootstrap_resample(const TrainingSet& dataset, std::uint64_t seed,
                               std::size_t index) {
    const std::vector<std::size_t> vg_rows = dataset.rows_with(Label::Vg);
    const std::vector<std::size_t> nvg_rows = dataset.rows_with(Label::NonVg);
    if (vg_rows.empty() || nvg_rows.empty()) {
        throw ValidationError("bootstrap: both classes must be present");
    }

    std::mt19937_64 eng(stream_seed(seed, index));
    TrainingSet out;
    out.ids.reserve(dataset.rows());
    out.labels.reserve(dataset.rows());
    out.x.reserve(dataset.rows());
    // All vG draws first, then all nvG draws: the draw order is part of the
    // determinism contract. eng() % count keeps the mapping portable.
    for (const std::vector<std::size_t>* rows : {&vg_rows, &nvg_rows}) {
        for (std::size_t d = 0; d < rows->size(); ++d) {
            const std::size_t pick = (*rows)[eng() % rows->size()];
            out.ids.push_back(dataset.ids[pick]);
            out.labels.push_back(dataset.labels[pick]);
            out.x.push_back(dataset.x[pick]);
        }
    }
    return out;
}

BootstrapReport summarize_accuracies(const std::vector<double>& accuracies,
                                     std::uint64_t seed) {
    const std::size_t b = accuracies.size();
    if (b == 0) throw ValidationError("bootstrap: need at least one dataset");

    BootstrapReport report;
    report.seed = seed;
    report.b = b;
    report.accuracies = accuracies;

    double sum = 0.0;
    for (double a : accuracies) sum += a;
    report.mean = sum / static_cast<double>(b);

    double sq = 0.0;
    for (double a : accuracies) {
        const double d = a - report.mean;
        sq += d * d;
    }
    report.std = b > 1 ? std::sqrt(sq / static_cast<double>(b - 1)) : 0.0;

    std::vector<double> sorted = accuracies;
    std::sort(sorted.begin(), sorted.end());
    report.median = (b % 2 == 1)
                        ? sorted[b / 2]
                        : (sorted[b / 2 - 1] + sorted[b / 2]) / 2.0;

    // ceil(0.03 b) and ceil(0.975 b) as exact integer arithmetic, 1-based.
    const std::size_t lo_rank = (3 * b + 99) / 100;
    const std::size_t hi_rank = (975 * b + 999) / 1000;
    report.ci_low = sorted[lo_rank - 1];
    report.ci_high = sorted[hi_rank - 1];
    return report;
}

BootstrapReport bootstrap(const TrainingSet& dataset,
                          const BootstrapOptions& options) {
    dataset.validate();
    if (options.b < 1) throw ValidationError("bootstrap: B must be at least 1");

    LoocvOptions fold_options;
    fold_options.k = options.k;
    fold_options.fixed_features = options.fixed_features;
    fold_options.skip_constant_columns = options.skip_constant_columns;

    std::vector<double> accuracies(options.b, 0.0);
    std::vector<std::exception_ptr> failures(options.b);
    parallel_for(options.b, [&](std::size_t i) {
        try {
            const TrainingSet resampled = bootstrap_resample(dataset, options.seed, i);
            accuracies[i] = loocv(resampled, fold_options).metrics.accuracy;
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });
    for (std::size_t i = 0; i < options.b; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
    }
    return summarize_accuracies(accuracies, options.seed);
}

} // namespace framestylo
