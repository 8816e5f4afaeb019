#include "framestylo/features.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "framestylo/errors.hpp"

namespace framestylo {

GrayImage grayscale(const ColorImage& color) {
    const std::size_t rows = color.red.rows();
    const std::size_t cols = color.red.cols();
    if (color.green.rows() != rows || color.green.cols() != cols ||
        color.blue.rows() != rows || color.blue.cols() != cols) {
        throw ValidationError("grayscale: color planes differ in shape");
    }
    GrayImage gray(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const double* red = color.red.row(r);
        const double* green = color.green.row(r);
        const double* blue = color.blue.row(r);
        double* out = gray.row(r);
        for (std::size_t c = 0; c < cols; ++c) {
            out[c] = 0.299 * red[c] + 0.587 * green[c] + 0.114 * blue[c];
        }
    }
    return gray;
}

GrayImage crop_border(const GrayImage& image, std::size_t margin) {
    const std::size_t need = 2 * margin + 3;
    if (image.rows() < need || image.cols() < need) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "crop_border: image %zux%zu too small for margin %zu "
                      "(needs at least %zux%zu)",
                      image.rows(), image.cols(), margin, need, need);
        throw ValidationError(msg);
    }
    GrayImage out(image.rows() - 2 * margin, image.cols() - 2 * margin);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        const double* src = image.row(r + margin) + margin;
        double* dst = out.row(r);
        for (std::size_t c = 0; c < out.cols(); ++c) dst[c] = src[c];
    }
    return out;
}

ChannelStats channel_stats(const Matrix& matrix) {
    const std::size_t n = matrix.rows() * matrix.cols();
    if (n < 2) throw ValidationError("channel_stats: need at least 2 entries");
    const std::vector<double>& a = matrix.values();

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i];
    const double mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - mean;
        sq += d * d;
    }
    const double std_dev = std::sqrt(sq / static_cast<double>(n - 1));

    std::size_t outliers = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::fabs(a[i] - mean) > std_dev) ++outliers;
    }

    ChannelStats s;
    s.mean = mean;
    s.std = std_dev;
    s.tail_pct = static_cast<double>(outliers) / static_cast<double>(n);
    return s;
}

namespace {

void put_stats(FeatureVector& f, std::size_t channels, std::size_t j,
               const ChannelStats& s) {
    f[0 * channels + j] = s.mean;
    f[1 * channels + j] = s.std;
    f[2 * channels + j] = s.tail_pct;
}

} // namespace

FeatureVector feature_vector(const GrayImage& image, int levels,
                             Boundary boundary) {
    const std::size_t channels = channel_count(levels);
    const std::array<Kernel, 18>& bank = filter_bank();
    FeatureVector f(3 * channels, 0.0);

    if (levels == 1) {
        // One filtered matrix at a time; the full stack is never held.
        for (std::size_t j = 0; j < 18; ++j) {
            put_stats(f, channels, j, channel_stats(convolve(image, bank[j], boundary)));
        }
        return f;
    }

    // Two levels: high-pass responses of the image itself, then the whole
    // bank applied to its low-pass approximation.
    for (std::size_t j = 1; j < 18; ++j) {
        put_stats(f, channels, j - 1, channel_stats(convolve(image, bank[j], boundary)));
    }
    const Matrix low = convolve(image, bank[0], boundary);
    for (std::size_t j = 0; j < 18; ++j) {
        put_stats(f, channels, 17 + j, channel_stats(convolve(low, bank[j], boundary)));
    }
    return f;
}

std::vector<std::string> feature_names(int levels) {
    const std::size_t channels = channel_count(levels);
    std::vector<std::string> channel_tags;
    channel_tags.reserve(channels);
    char buf[16];
    if (levels == 1) {
        for (int j = 0; j < 18; ++j) {
            std::snprintf(buf, sizeof(buf), "t%02d", j);
            channel_tags.push_back(buf);
        }
    } else {
        for (int j = 1; j < 18; ++j) {
            std::snprintf(buf, sizeof(buf), "t%02d", j);
            channel_tags.push_back(buf);
        }
        for (int j = 0; j < 18; ++j) {
            std::snprintf(buf, sizeof(buf), "lp_t%02d", j);
            channel_tags.push_back(buf);
        }
    }

    static const char* const kStatNames[3] = {"mean", "std", "tail"};
    std::vector<std::string> names;
    names.reserve(3 * channels);
    for (int s = 0; s < 3; ++s) {
        for (const std::string& tag : channel_tags) {
            names.push_back(std::string(kStatNames[s]) + "_" + tag);
        }
    }
    return names;
}

} // namespace framestylo
