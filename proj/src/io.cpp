#include "framestylo/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "framestylo/errors.hpp"
#include "framestylo/image_codec.hpp"
#include "framestylo/parallel.hpp"

namespace framestylo {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out.good()) throw IoError("write failed: " + path);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const std::string::size_type comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

Label parse_label(const std::string& text, std::size_t line_no) {
    try {
        return label_from_string(text);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no);
    }
}

double parse_double(const std::string& token, std::size_t line_no) {
    if (token.empty()) throw ParseError("empty numeric field", line_no);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
        throw ParseError("bad numeric field \"" + token + "\"", line_no);
    }
    return v;
}

} // namespace

Manifest read_manifest(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || lines[0] != "id,path,label") {
        throw ParseError("manifest must start with header id,path,label", 1);
    }
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    Manifest manifest;
    std::set<std::string> seen;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const std::string& line = lines[ln];
        if (line.empty()) continue;
        const std::size_t line_no = ln + 1;

        // id and label cannot contain commas; the path in between may.
        const std::string::size_type first = line.find(',');
        const std::string::size_type last = line.rfind(',');
        if (first == std::string::npos || last == first) {
            throw ParseError("expected id,path,label", line_no);
        }
        ManifestEntry entry;
        entry.id = line.substr(0, first);
        entry.path = line.substr(first + 1, last - first - 1);
        entry.label = parse_label(line.substr(last + 1), line_no);
        if (entry.id.empty()) throw ParseError("empty id", line_no);
        if (entry.path.empty()) throw ParseError("empty path", line_no);
        if (!seen.insert(entry.id).second) {
            throw ParseError("duplicate id \"" + entry.id + "\"", line_no);
        }
        const std::filesystem::path p(entry.path);
        if (p.is_relative() && !base.empty()) {
            entry.path = (base / p).string();
        }
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

TrainingSet FeatureTable::to_training_set() const {
    TrainingSet out;
    out.ids = ids;
    out.labels = labels;
    out.x = values;
    return out;
}

void write_feature_table(const FeatureTable& table, const std::string& path) {
    std::ostringstream out;
    out << "id,label";
    for (const std::string& name : table.names) out << ',' << name;
    out << '\n';

    char buf[32];
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        out << table.ids[i] << ',' << to_string(table.labels[i]);
        for (double v : table.values[i]) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
    write_text(path, out.str());
}

FeatureTable read_feature_table(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) throw ParseError("empty feature table", 1);

    const std::vector<std::string> header = split_csv(lines[0]);
    if (header.size() < 3 || header[0] != "id" || header[1] != "label") {
        throw ParseError("feature table header must be id,label,<names...>", 1);
    }

    FeatureTable table;
    table.names.assign(header.begin() + 2, header.end());
    std::set<std::string> seen;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        const std::size_t line_no = ln + 1;
        const std::vector<std::string> fields = split_csv(lines[ln]);
        if (fields.size() != table.names.size() + 2) {
            std::ostringstream msg;
            msg << "expected " << table.names.size() + 2 << " fields, got "
                << fields.size();
            throw ParseError(msg.str(), line_no);
        }
        if (fields[0].empty()) throw ParseError("empty id", line_no);
        if (!seen.insert(fields[0]).second) {
            throw ParseError("duplicate id \"" + fields[0] + "\"", line_no);
        }
        table.ids.push_back(fields[0]);
        table.labels.push_back(parse_label(fields[1], line_no));
        std::vector<double> row(table.names.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = parse_double(fields[j + 2], line_no);
        }
        table.values.push_back(std::move(row));
    }
    return table;
}

ExtractResult extract_features(const Manifest& manifest,
                               const ExtractOptions& options) {
    const std::size_t n = manifest.entries.size();
    std::vector<FeatureVector> rows(n);
    std::vector<std::string> errors(n);
    std::vector<std::exception_ptr> failures(n);

    parallel_for(n, [&](std::size_t i) {
        const ManifestEntry& entry = manifest.entries[i];
        try {
            const ColorImage color = load_image(entry.path);
            const GrayImage gray = crop_border(grayscale(color), options.crop_margin);
            rows[i] = feature_vector(gray, options.levels, options.boundary);
        } catch (const std::exception& e) {
            errors[i] = e.what();
            failures[i] = std::current_exception();
        }
    });

    ExtractResult result;
    result.table.names = feature_names(options.levels);
    for (std::size_t i = 0; i < n; ++i) {
        if (failures[i]) {
            if (!options.skip_bad) std::rethrow_exception(failures[i]);
            result.skipped.push_back(manifest.entries[i].id + ": " + errors[i]);
            continue;
        }
        result.table.ids.push_back(manifest.entries[i].id);
        result.table.labels.push_back(manifest.entries[i].label);
        result.table.values.push_back(std::move(rows[i]));
    }
    return result;
}

void write_model(const TrainedClassifier& model, int levels,
                 const std::string& path) {
    if (3 * channel_count(levels) != model.source_dim) {
        throw ValidationError("write_model: levels do not match model dimension");
    }
    const std::vector<std::string> names = feature_names(levels);

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["levels"] = levels;
    j["feature_indices"] = model.feature_indices;
    std::vector<std::string> selected_names;
    for (std::size_t idx : model.feature_indices) {
        selected_names.push_back(idx < names.size() ? names[idx] : "");
    }
    j["feature_names"] = selected_names;
    j["scales"] = model.scales;
    j["center"] = model.center;
    j["threshold"] = model.threshold;
    j["training_accuracy"] = model.training_accuracy;
    write_text(path, j.dump(2) + "\n");
}

std::pair<TrainedClassifier, int> read_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad model JSON: ") + e.what(), 1);
    }

    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw ValidationError("unsupported model schema_version");
        }
        const int levels = j.at("levels").get<int>();
        TrainedClassifier model;
        model.feature_indices =
            j.at("feature_indices").get<std::vector<std::size_t>>();
        model.scales = j.at("scales").get<std::vector<double>>();
        model.center = j.at("center").get<std::vector<double>>();
        model.threshold = j.at("threshold").get<double>();
        model.training_accuracy = j.at("training_accuracy").get<double>();
        model.source_dim = 3 * channel_count(levels);

        if (model.scales.size() != model.feature_indices.size() ||
            model.center.size() != model.feature_indices.size()) {
            throw ValidationError("model arrays have inconsistent lengths");
        }
        for (std::size_t idx : model.feature_indices) {
            if (idx >= model.source_dim) {
                throw ValidationError("model feature index out of range");
            }
        }
        for (double s : model.scales) {
            if (!(s > 0.0)) throw ValidationError("model scale must be positive");
        }
        return {std::move(model), levels};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad model JSON: ") + e.what(), 1);
    }
}

void write_loocv_report(const EvaluationReport& report,
                        const std::vector<std::string>& feature_names,
                        const std::string& path) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["metrics"] = {{"tp", report.metrics.tp},
                    {"tn", report.metrics.tn},
                    {"tpr", report.metrics.tpr},
                    {"tnr", report.metrics.tnr},
                    {"accuracy", report.metrics.accuracy}};

    j["per_painting"] = ordered_json::array();
    std::vector<FeatureSet> sets;
    for (const PaintingResult& row : report.per_painting) {
        ordered_json r;
        r["id"] = row.id;
        r["truth"] = to_string(row.truth);
        r["predicted"] = to_string(row.predicted);
        r["distance"] = row.distance;
        r["selected"] = row.selected;
        j["per_painting"].push_back(std::move(r));
        FeatureSet s;
        s.indices = row.selected;
        sets.push_back(std::move(s));
    }

    j["feature_frequencies"] = ordered_json::array();
    for (const FeatureFrequency& f : feature_frequencies(sets)) {
        ordered_json r;
        r["index"] = f.index;
        r["name"] = f.index < feature_names.size() ? feature_names[f.index] : "";
        r["count"] = f.count;
        j["feature_frequencies"].push_back(std::move(r));
    }
    write_text(path, j.dump(2) + "\n");
}

void write_bootstrap_report(const BootstrapReport& report,
                            const std::string& path) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = report.seed;
    j["B"] = report.b;
    j["accuracies"] = report.accuracies;
    j["mean"] = report.mean;
    j["median"] = report.median;
    j["std"] = report.std;
    j["ci_low"] = report.ci_low;
    j["ci_high"] = report.ci_high;
    write_text(path, j.dump(2) + "\n");
}

void write_histogram(const std::vector<double>& accuracies,
                     const std::string& path) {
    std::array<std::size_t, 100> counts{};
    for (double a : accuracies) {
        // Nudge before truncating so grid values like 0.29 land in their
        // own bin despite binary rounding; 1.0 clamps into the last bin.
        int bin = static_cast<int>(a * 100.0 + 1e-9);
        if (bin < 0) bin = 0;
        if (bin > 99) bin = 99;
        counts[static_cast<std::size_t>(bin)]++;
    }
    std::ostringstream out;
    char edge[16];
    for (std::size_t b = 0; b < counts.size(); ++b) {
        std::snprintf(edge, sizeof(edge), "%.2f", static_cast<double>(b) / 100.0);
        out << edge << ' ' << counts[b] << '\n';
    }
    write_text(path, out.str());
}

} // namespace framestylo
