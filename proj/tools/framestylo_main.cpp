#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "framestylo/errors.hpp"
#include "framestylo/evaluation.hpp"
#include "framestylo/io.hpp"

namespace {

using namespace framestylo;

Boundary parse_boundary(const std::string& name) {
    if (name == "reflect") return Boundary::Reflect;
    if (name == "circular") return Boundary::Circular;
    throw ValidationError("unknown boundary \"" + name +
                          "\" (expected reflect or circular)");
}

int levels_for_dim(std::size_t dim) {
    if (dim == 3 * channel_count(1)) return 1;
    if (dim == 3 * channel_count(2)) return 2;
    throw ValidationError(
        "feature count must be 54 (one level) or 105 (two) to build a model");
}

std::optional<std::vector<std::size_t>> fixed_or_none(
    const std::vector<std::size_t>& fixed) {
    if (fixed.empty()) return std::nullopt;
    return fixed;
}

void run_extract(const std::string& manifest_path, const std::string& out_path,
                 std::size_t margin, int levels, const std::string& boundary,
                 bool skip_bad) {
    ExtractOptions options;
    options.crop_margin = margin;
    options.levels = levels;
    options.boundary = parse_boundary(boundary);
    options.skip_bad = skip_bad;

    const Manifest manifest = read_manifest(manifest_path);
    const ExtractResult result = extract_features(manifest, options);
    for (const std::string& s : result.skipped) {
        std::cerr << "skipped " << s << "\n";
    }
    write_feature_table(result.table, out_path);
    std::cerr << "wrote " << result.table.ids.size() << " rows to " << out_path
              << "\n";
}

void run_loocv(const std::string& features_path, const std::string& out_path,
               std::size_t k, const std::vector<std::size_t>& fixed,
               bool skip_constant) {
    const FeatureTable table = read_feature_table(features_path);
    LoocvOptions options;
    options.k = k;
    options.fixed_features = fixed_or_none(fixed);
    options.skip_constant_columns = skip_constant;
    const EvaluationReport report = loocv(table.to_training_set(), options);
    write_loocv_report(report, table.names, out_path);
    std::fprintf(stderr, "accuracy %.4f (tp %zu, tn %zu)\n",
                 report.metrics.accuracy, report.metrics.tp, report.metrics.tn);
}

void run_train(const std::string& features_path, const std::string& out_path,
               std::size_t k, const std::vector<std::size_t>& fixed,
               bool skip_constant) {
    const FeatureTable table = read_feature_table(features_path);
    const TrainingSet dataset = table.to_training_set();
    dataset.validate();
    const int levels = levels_for_dim(dataset.dim());

    const NormalizedSet xn = normalize_columns(dataset);
    FeatureSet features;
    if (const auto f = fixed_or_none(fixed)) {
        features.indices = *f;
    } else {
        SelectOptions select;
        select.k = k;
        select.skip_constant_columns = skip_constant;
        features = forward_select(xn, dataset.labels, select);
    }
    const TrainedClassifier model = train(xn, dataset.labels, features);
    write_model(model, levels, out_path);
    std::fprintf(stderr, "training accuracy %.4f, threshold %.6g\n",
                 model.training_accuracy, model.threshold);
}

void run_classify(const std::string& features_path,
                  const std::string& model_path) {
    const auto [model, levels] = read_model(model_path);
    (void)levels;
    const FeatureTable table = read_feature_table(features_path);
    char buf[32];
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        const Classification c = classify(model, table.values[i]);
        std::snprintf(buf, sizeof(buf), "%.17g", c.distance);
        std::cout << table.ids[i] << ',' << buf << ',' << to_string(c.label)
                  << '\n';
    }
}

void run_bootstrap(const std::string& features_path, const std::string& out_path,
                   const std::string& hist_path, std::size_t b,
                   std::uint64_t seed, std::size_t k,
                   const std::vector<std::size_t>& fixed, bool skip_constant) {
    const FeatureTable table = read_feature_table(features_path);
    BootstrapOptions options;
    options.b = b;
    options.seed = seed;
    options.k = k;
    options.fixed_features = fixed_or_none(fixed);
    options.skip_constant_columns = skip_constant;
    const BootstrapReport report = bootstrap(table.to_training_set(), options);
    write_bootstrap_report(report, out_path);
    write_histogram(report.accuracies, hist_path);
    std::fprintf(stderr, "mean %.4f median %.4f ci [%.4f, %.4f]\n", report.mean,
                 report.median, report.ci_low, report.ci_high);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-to-center painting authentication over tight-frame "
                 "brushwork statistics"};
    app.require_subcommand(1);

    std::string manifest_path, features_path, model_path, out_path, hist_path;
    std::string boundary = "reflect";
    std::size_t margin = 100, k = 5, b = 200;
    std::uint64_t seed = 0;
    int levels = 1;
    bool skip_bad = false, skip_constant = false;
    std::vector<std::size_t> fixed;

    CLI::App* extract = app.add_subcommand(
        "extract", "Compute feature vectors for the paintings in a manifest");
    extract->add_option("--manifest", manifest_path, "manifest CSV (id,path,label)")
        ->required();
    extract->add_option("--out", out_path, "output feature table")->required();
    extract->add_option("--margin", margin, "border pixels to crop")->capture_default_str();
    extract->add_option("--levels", levels, "decomposition levels (1 or 2)")->capture_default_str()
        ->check(CLI::Range(1, 2));
    extract->add_option("--boundary", boundary, "reflect or circular")->capture_default_str();
    extract->add_flag("--skip-bad", skip_bad,
                      "skip undecodable or too-small images instead of failing");
    extract->callback([&] {
        run_extract(manifest_path, out_path, margin, levels, boundary, skip_bad);
    });

    CLI::App* loocv_cmd = app.add_subcommand(
        "loocv", "Leave-one-out cross-validation over a feature table");
    loocv_cmd->add_option("--features", features_path, "feature table")->required();
    loocv_cmd->add_option("--out", out_path, "output report JSON")->required();
    loocv_cmd->add_option("--k", k, "features to select per fold")->capture_default_str();
    loocv_cmd
        ->add_option("--fixed", fixed,
                     "comma-separated feature indices; skips selection")
        ->delimiter(',');
    loocv_cmd->add_flag("--skip-constant", skip_constant,
                        "exclude zero-variance columns from selection");
    loocv_cmd->callback(
        [&] { run_loocv(features_path, out_path, k, fixed, skip_constant); });

    CLI::App* train_cmd =
        app.add_subcommand("train", "Fit a classifier on a full feature table");
    train_cmd->add_option("--features", features_path, "feature table")->required();
    train_cmd->add_option("--out", out_path, "output model JSON")->required();
    train_cmd->add_option("--k", k, "features to select")->capture_default_str();
    train_cmd
        ->add_option("--fixed", fixed,
                     "comma-separated feature indices; skips selection")
        ->delimiter(',');
    train_cmd->add_flag("--skip-constant", skip_constant,
                        "exclude zero-variance columns from selection");
    train_cmd->callback(
        [&] { run_train(features_path, out_path, k, fixed, skip_constant); });

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Classify feature rows with a trained model");
    classify_cmd->add_option("--features", features_path, "feature table")
        ->required();
    classify_cmd->add_option("--model", model_path, "model JSON")->required();
    classify_cmd->callback([&] { run_classify(features_path, model_path); });

    CLI::App* boot_cmd = app.add_subcommand(
        "bootstrap", "Bootstrap-resampled LOOCV accuracy distribution");
    boot_cmd->add_option("--features", features_path, "feature table")->required();
    boot_cmd->add_option("--out", out_path, "output report JSON")->required();
    boot_cmd->add_option("--hist", hist_path, "output histogram data")->required();
    boot_cmd->add_option("--B", b, "number of bootstrap datasets")->capture_default_str();
    boot_cmd->add_option("--seed", seed, "RNG seed")->required();
    boot_cmd->add_option("--k", k, "features to select per fold")->capture_default_str();
    boot_cmd
        ->add_option("--fixed", fixed,
                     "comma-separated feature indices; skips selection")
        ->delimiter(',');
    boot_cmd->add_flag("--skip-constant", skip_constant,
                       "exclude zero-variance columns from selection");
    boot_cmd->callback([&] {
        run_bootstrap(features_path, out_path, hist_path, b, seed, k, fixed,
                      skip_constant);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const framestylo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const framestylo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const framestylo::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
