#include <cmath>

#include <doctest.h>

#include "framestylo/errors.hpp"
#include "framestylo/features.hpp"
#include "support/oracles.hpp"

using namespace framestylo;

namespace {

ColorImage solid_color(std::size_t rows, std::size_t cols, double r, double g,
                       double b) {
    ColorImage img{Matrix(rows, cols), Matrix(rows, cols), Matrix(rows, cols)};
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            img.red(i, j) = r;
            img.green(i, j) = g;
            img.blue(i, j) = b;
        }
    }
    return img;
}

} // namespace

TEST_CASE("grayscale uses the 0.299/0.587/0.114 weights") {
    const GrayImage pure_red = grayscale(solid_color(3, 4, 255, 0, 0));
    CHECK(pure_red(1, 2) == doctest::Approx(76.245).epsilon(1e-12));

    const GrayImage mixed = grayscale(solid_color(3, 4, 10, 20, 30));
    CHECK(mixed(0, 0) ==
          doctest::Approx(0.299 * 10 + 0.587 * 20 + 0.114 * 30).epsilon(1e-14));
}

TEST_CASE("grayscale rejects mismatched planes") {
    ColorImage bad{Matrix(3, 3), Matrix(3, 3), Matrix(3, 4)};
    CHECK_THROWS_AS(grayscale(bad), ValidationError);
}

TEST_CASE("crop_border drops the margin on all sides") {
    GrayImage x(9, 8);
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            x(r, c) = static_cast<double>(10 * r + c);
        }
    }
    const GrayImage out = crop_border(x, 2);
    REQUIRE(out.rows() == 5);
    REQUIRE(out.cols() == 4);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(out(r, c) == x(r + 2, c + 2));
        }
    }
}

TEST_CASE("crop_border shape on a painting-sized input") {
    const GrayImage big(1452, 833);
    const GrayImage out = crop_border(big, 100);
    CHECK(out.rows() == 1252);
    CHECK(out.cols() == 633);
}

TEST_CASE("crop_border rejects images that are too small") {
    CHECK_THROWS_AS(crop_border(GrayImage(150, 300), 100), ValidationError);
    CHECK_THROWS_AS(crop_border(GrayImage(202, 202), 100), ValidationError);
    CHECK_NOTHROW(crop_border(GrayImage(203, 203), 100));
}

TEST_CASE("channel_stats on the 2x2 worked examples") {
    Matrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    const ChannelStats s = channel_stats(m);
    CHECK(s.mean == 2.5);
    CHECK(s.std == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
    CHECK(s.tail_pct == 0.5);

    Matrix p(2, 2);
    p(0, 0) = 1;
    p(0, 1) = -1;
    p(1, 0) = -1;
    p(1, 1) = 1;
    const ChannelStats t = channel_stats(p);
    CHECK(t.mean == 0.0);
    CHECK(t.std == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-15));
    CHECK(t.tail_pct == 0.0);
}

TEST_CASE("channel_stats matches the brute-force reference") {
    oracles::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m =
            oracles::random_image(rng, 2 + rng.below(9), 2 + rng.below(9), -5, 5);
        const ChannelStats got = channel_stats(m);
        const oracles::ReferenceStats want = oracles::reference_stats(m);
        CHECK(got.mean == doctest::Approx(want.mean).epsilon(1e-13));
        CHECK(got.std == doctest::Approx(want.std).epsilon(1e-13));
        CHECK(got.tail_pct == want.tail_pct);
    }
}

TEST_CASE("feature_vector layout matches per-channel stats, one level") {
    oracles::Rng rng(5150);
    const GrayImage x = oracles::random_image(rng, 12, 10);
    const FeatureVector f = feature_vector(x, 1);
    REQUIRE(f.size() == 54);

    const CoefficientStack stack = analyze(x, Boundary::Reflect);
    for (std::size_t j = 0; j < 18; ++j) {
        const ChannelStats s = channel_stats(stack.matrices[j]);
        CHECK(f[j] == s.mean);
        CHECK(f[18 + j] == s.std);
        CHECK(f[36 + j] == s.tail_pct);
    }
}

TEST_CASE("feature_vector layout matches per-channel stats, two levels") {
    oracles::Rng rng(5151);
    const GrayImage x = oracles::random_image(rng, 12, 10);
    const FeatureVector f = feature_vector(x, 2);
    REQUIRE(f.size() == 105);

    const CoefficientStack stack = analyze_two_level(x, Boundary::Reflect);
    REQUIRE(stack.matrices.size() == 35);
    for (std::size_t j = 0; j < 35; ++j) {
        const ChannelStats s = channel_stats(stack.matrices[j]);
        CHECK(f[j] == s.mean);
        CHECK(f[35 + j] == s.std);
        CHECK(f[70 + j] == s.tail_pct);
    }
}

TEST_CASE("feature names encode statistic and filter") {
    const std::vector<std::string> one = feature_names(1);
    REQUIRE(one.size() == 54);
    CHECK(one[0] == "mean_t00");
    CHECK(one[3] == "mean_t03");
    CHECK(one[18] == "std_t00");
    CHECK(one[36] == "tail_t00");
    CHECK(one[37] == "tail_t01");
    CHECK(one[44] == "tail_t08");
    CHECK(one[52] == "tail_t16");
    CHECK(one[53] == "tail_t17");

    const std::vector<std::string> two = feature_names(2);
    REQUIRE(two.size() == 105);
    CHECK(two[0] == "mean_t01");
    CHECK(two[16] == "mean_t17");
    CHECK(two[17] == "mean_lp_t00");
    CHECK(two[34] == "mean_lp_t17");
    CHECK(two[35] == "std_t01");
    CHECK(two[70] == "tail_t01");
    CHECK(two[104] == "tail_lp_t17");
}
