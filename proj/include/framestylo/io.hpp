#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framestylo/classifier.hpp"
#include "framestylo/evaluation.hpp"
#include "framestylo/features.hpp"
#include "framestylo/selection.hpp"
#include "framestylo/tight_frame.hpp"

namespace framestylo {

struct ManifestEntry {
    std::string id;
    std::string path;  // relative entries are resolved against the manifest
    Label label = Label::NonVg;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

// On-disk form of a feature matrix: header `id,label,<names...>`, one row
// per painting, values written with 17 significant digits.
struct FeatureTable {
    std::vector<std::string> names;
    std::vector<std::string> ids;
    std::vector<Label> labels;
    std::vector<std::vector<double>> values;

    TrainingSet to_training_set() const;
};

Manifest read_manifest(const std::string& path);

void write_feature_table(const FeatureTable& table, const std::string& path);
FeatureTable read_feature_table(const std::string& path);

struct ExtractOptions {
    std::size_t crop_margin = 100;
    int levels = 1;
    Boundary boundary = Boundary::Reflect;
    // Report undecodable/too-small images and continue instead of failing.
    bool skip_bad = false;
};

struct ExtractResult {
    FeatureTable table;
    std::vector<std::string> skipped;  // "id: reason" lines, manifest order
};

ExtractResult extract_features(const Manifest& manifest,
                               const ExtractOptions& options = {});

void write_model(const TrainedClassifier& model, int levels,
                 const std::string& path);
// Returns the model plus the levels value it was built from.
std::pair<TrainedClassifier, int> read_model(const std::string& path);

void write_loocv_report(const EvaluationReport& report,
                        const std::vector<std::string>& feature_names,
                        const std::string& path);

void write_bootstrap_report(const BootstrapReport& report,
                            const std::string& path);

// 100 bins of width 0.01 over [0,1]; lines of "lower_edge count".
void write_histogram(const std::vector<double>& accuracies,
                     const std::string& path);

} // namespace framestylo
