#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace framestylo {

enum class Label { Vg, NonVg };

std::string to_string(Label label);
Label label_from_string(const std::string& text);

// Feature matrix with one row per painting.
struct TrainingSet {
    std::vector<std::string> ids;
    std::vector<Label> labels;
    std::vector<std::vector<double>> x;  // n rows, each of equal length

    std::size_t rows() const { return x.size(); }
    std::size_t dim() const { return x.empty() ? 0 : x.front().size(); }
    std::vector<std::size_t> rows_with(Label label) const;
    void validate() const;  // shape, label counts, finiteness
};

// Column-scaled copy of a training matrix. Columns are divided by their
// sample standard deviation; zero-variance columns keep scale 1 and are
// flagged.
struct NormalizedSet {
    std::vector<std::vector<double>> x;
    std::vector<double> scales;
    std::vector<bool> constant_column;

    std::size_t rows() const { return x.size(); }
    std::size_t dim() const { return scales.size(); }
};

// Result of greedy selection: chosen columns in selection order plus the
// AUC reached after each addition.
struct FeatureSet {
    std::vector<std::size_t> indices;
    std::vector<double> auc_trace;
};

struct SelectOptions {
    std::size_t k = 5;
    // Leave flagged zero-variance columns out of the candidate scan. They
    // can never separate the classes either way; this only affects which
    // index wins a pure tie.
    bool skip_constant_columns = false;
};

struct FeatureFrequency {
    std::size_t index = 0;
    std::size_t count = 0;
};

NormalizedSet normalize_columns(const TrainingSet& train);

// Componentwise mean of the given rows restricted to `indices` (in order).
std::vector<double> vg_center(const NormalizedSet& xn,
                              const std::vector<std::size_t>& vg_rows,
                              const std::vector<std::size_t>& indices);

// Euclidean distance of every row to `center` over `indices`.
std::vector<double> distances(const NormalizedSet& xn,
                              const std::vector<std::size_t>& indices,
                              const std::vector<double>& center);

// Area under the ROC curve for the rule "distance < rho means vG", with
// tied distances given half credit. Equals the Mann-Whitney pair count.
double auc(const std::vector<double>& dists, const std::vector<Label>& labels);

FeatureSet forward_select(const NormalizedSet& xn,
                          const std::vector<Label>& labels,
                          const SelectOptions& options = {});

// How often each feature index appears across the given sets, ordered by
// count descending then index ascending.
std::vector<FeatureFrequency> feature_frequencies(
    const std::vector<FeatureSet>& sets);

} // namespace framestylo
