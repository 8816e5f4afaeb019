#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "framestylo/matrix.hpp"

namespace framestylo {

// One 3x3 filter of the 18-member geometric tight frame bank.
struct Kernel {
    int index = 0;
    std::array<std::array<double, 3>, 3> coefficients{};
};

// Padding rule for pixels outside the image. Reflect repeats the border
// pixel (symmetric padding); Circular wraps around and is the mode under
// which the bank's energy identity holds.
enum class Boundary { Reflect, Circular };

// All 18 filters in index order. Filter 0 is the low pass; filters 1-17 are
// first- and second-order differences along the horizontal, vertical and
// diagonal directions. The squared entries of the whole bank sum to 1.
const std::array<Kernel, 18>& filter_bank();

// Coefficient matrices of one analysed image, one per channel, each with the
// source image's dimensions. 18 channels for level 1, 35 for level 2.
struct CoefficientStack {
    std::vector<Matrix> matrices;
    int level = 1;
};

// Number of channels a stack has for the given number of levels (18 or 35).
std::size_t channel_count(int levels);

// 2D convolution (kernel flipped 180 degrees) with same-size output.
// Requires an image of at least 3x3.
Matrix convolve(const GrayImage& image, const Kernel& kernel,
                Boundary boundary = Boundary::Reflect);

// One-level analysis: the image convolved with every filter of the bank.
CoefficientStack analyze(const GrayImage& image, Boundary boundary = Boundary::Reflect);

// Two-level analysis without downsampling: the 17 level-1 high-pass outputs,
// followed by all 18 filters applied to the level-1 low-pass output.
CoefficientStack analyze_two_level(const GrayImage& image,
                                   Boundary boundary = Boundary::Reflect);

} // namespace framestylo
