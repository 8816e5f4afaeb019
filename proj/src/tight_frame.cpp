#include "framestylo/tight_frame.hpp"

#include <cmath>
#include <string>

#include "framestylo/errors.hpp"

namespace framestylo {

namespace {

Kernel make_kernel(int index, double scale, std::array<std::array<int, 3>, 3> pattern) {
    Kernel k;
    k.index = index;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            k.coefficients[i][j] = scale * pattern[i][j];
    return k;
}

std::array<Kernel, 18> build_bank() {
    const double r2 = std::sqrt(2.0);
    const double r7 = std::sqrt(7.0);
    return {
        make_kernel(0, 1.0 / 16, {{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}}),
        make_kernel(1, 1.0 / 16, {{{1, 0, -1}, {2, 0, -2}, {1, 0, -1}}}),
        make_kernel(2, 1.0 / 16, {{{1, 2, 1}, {0, 0, 0}, {-1, -2, -1}}}),
        make_kernel(3, r2 / 16, {{{1, 1, 0}, {1, 0, -1}, {0, -1, -1}}}),
        make_kernel(4, r2 / 16, {{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}}),
        make_kernel(5, r7 / 24, {{{1, 0, -1}, {0, 0, 0}, {-1, 0, 1}}}),
        make_kernel(6, 1.0 / 48, {{{-1, 2, -1}, {-2, 4, -2}, {-1, 2, -1}}}),
        make_kernel(7, 1.0 / 48, {{{-1, -2, -1}, {2, 4, 2}, {-1, -2, -1}}}),
        make_kernel(8, 1.0 / 12, {{{0, 0, -1}, {0, 2, 0}, {-1, 0, 0}}}),
        make_kernel(9, 1.0 / 12, {{{-1, 0, 0}, {0, 2, 0}, {0, 0, -1}}}),
        make_kernel(10, r2 / 12, {{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}}),
        make_kernel(11, r2 / 16, {{{-1, 0, 1}, {2, 0, -2}, {-1, 0, 1}}}),
        make_kernel(12, r2 / 16, {{{-1, 2, -1}, {0, 0, 0}, {1, -2, 1}}}),
        make_kernel(13, 1.0 / 48, {{{1, -2, 1}, {-2, 4, -2}, {1, -2, 1}}}),
        make_kernel(14, r2 / 12, {{{0, 0, 0}, {-1, 2, -1}, {0, 0, 0}}}),
        make_kernel(15, r2 / 24, {{{-1, 2, -1}, {0, 0, 0}, {-1, 2, -1}}}),
        make_kernel(16, r2 / 12, {{{0, -1, 0}, {0, 2, 0}, {0, -1, 0}}}),
        make_kernel(17, r2 / 24, {{{-1, 0, -1}, {2, 0, 2}, {-1, 0, -1}}}),
    };
}

// Maps an out-of-range row/column index to a valid one. Only offsets of one
// pixel can occur with 3x3 kernels.
inline std::size_t map_index(long i, long n, Boundary boundary) {
    if (i < 0) return boundary == Boundary::Reflect ? 0 : static_cast<std::size_t>(i + n);
    if (i >= n) return boundary == Boundary::Reflect ? static_cast<std::size_t>(n - 1)
                                                     : static_cast<std::size_t>(i - n);
    return static_cast<std::size_t>(i);
}

void require_at_least_3x3(const GrayImage& image, const char* op) {
    if (image.rows() < 3 || image.cols() < 3)
        throw ValidationError(std::string(op) + ": image must be at least 3x3, got " +
                              std::to_string(image.rows()) + "x" + std::to_string(image.cols()));
}

} // namespace

const std::array<Kernel, 18>& filter_bank() {
    static const std::array<Kernel, 18> bank = build_bank();
    return bank;
}

std::size_t channel_count(int levels) {
    if (levels == 1) return 18;
    if (levels == 2) return 35;
    throw ValidationError("levels must be 1 or 2, got " + std::to_string(levels));
}

Matrix convolve(const GrayImage& image, const Kernel& kernel, Boundary boundary) {
    require_at_least_3x3(image, "convolve");
    const long m = static_cast<long>(image.rows());
    const long n = static_cast<long>(image.cols());

    // Flip the kernel once; the remaining loops are then a correlation.
    double k[3][3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            k[a][b] = kernel.coefficients[2 - a][2 - b];

    Matrix out(image.rows(), image.cols());
    for (long r = 0; r < m; ++r) {
        const double* s0 = image.row(map_index(r - 1, m, boundary));
        const double* s1 = image.row(static_cast<std::size_t>(r));
        const double* s2 = image.row(map_index(r + 1, m, boundary));
        double* dst = out.row(static_cast<std::size_t>(r));

        const std::size_t cl = map_index(-1, n, boundary);
        dst[0] = k[0][0] * s0[cl] + k[0][1] * s0[0] + k[0][2] * s0[1]
               + k[1][0] * s1[cl] + k[1][1] * s1[0] + k[1][2] * s1[1]
               + k[2][0] * s2[cl] + k[2][1] * s2[0] + k[2][2] * s2[1];

        for (long c = 1; c + 1 < n; ++c) {
            dst[c] = k[0][0] * s0[c - 1] + k[0][1] * s0[c] + k[0][2] * s0[c + 1]
                   + k[1][0] * s1[c - 1] + k[1][1] * s1[c] + k[1][2] * s1[c + 1]
                   + k[2][0] * s2[c - 1] + k[2][1] * s2[c] + k[2][2] * s2[c + 1];
        }

        const std::size_t cr = map_index(n, n, boundary);
        dst[n - 1] = k[0][0] * s0[n - 2] + k[0][1] * s0[n - 1] + k[0][2] * s0[cr]
                   + k[1][0] * s1[n - 2] + k[1][1] * s1[n - 1] + k[1][2] * s1[cr]
                   + k[2][0] * s2[n - 2] + k[2][1] * s2[n - 1] + k[2][2] * s2[cr];
    }
    return out;
}

CoefficientStack analyze(const GrayImage& image, Boundary boundary) {
    require_at_least_3x3(image, "analyze");
    const auto& bank = filter_bank();
    CoefficientStack stack;
    stack.level = 1;
    stack.matrices.reserve(bank.size());
    for (const Kernel& kernel : bank)
        stack.matrices.push_back(convolve(image, kernel, boundary));
    return stack;
}

CoefficientStack analyze_two_level(const GrayImage& image, Boundary boundary) {
    require_at_least_3x3(image, "analyze_two_level");
    const auto& bank = filter_bank();
    CoefficientStack stack;
    stack.level = 2;
    stack.matrices.reserve(35);
    for (std::size_t j = 1; j < bank.size(); ++j)
        stack.matrices.push_back(convolve(image, bank[j], boundary));
    const Matrix low = convolve(image, bank[0], boundary);
    for (const Kernel& kernel : bank)
        stack.matrices.push_back(convolve(low, kernel, boundary));
    return stack;
}

} // namespace framestylo
