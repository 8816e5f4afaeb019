#pragma once

#include <string>
#include <vector>

#include "framestylo/matrix.hpp"
#include "framestylo/tight_frame.hpp"

namespace framestylo {

// Color planes of a decoded painting, each with values in [0, 255].
struct ColorImage {
    Matrix red, green, blue;
};

// Per-channel summary of one coefficient matrix.
struct ChannelStats {
    double mean = 0.0;
    double std = 0.0;       // sample standard deviation, denominator m*n - 1
    double tail_pct = 0.0;  // fraction of entries with |a - mean| > std (strict)
};

// Painting feature vector: [all means, all stds, all tail percentages] in
// channel order. Entry s*C + j is statistic s of channel j, where C is the
// channel count (18 for one level, 35 for two).
using FeatureVector = std::vector<double>;

// Rec. 601 luminance 0.299 R + 0.587 G + 0.114 B, kept as real values.
GrayImage grayscale(const ColorImage& color);

// Interior of the image after removing `margin` pixels from each side.
GrayImage crop_border(const GrayImage& image, std::size_t margin = 100);

ChannelStats channel_stats(const Matrix& matrix);

FeatureVector feature_vector(const GrayImage& image, int levels = 1,
                             Boundary boundary = Boundary::Reflect);

// Column names matching the feature_vector layout, e.g. mean_t03, tail_t16.
std::vector<std::string> feature_names(int levels = 1);

} // namespace framestylo
