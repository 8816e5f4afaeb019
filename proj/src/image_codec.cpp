#include "framestylo/image_codec.hpp"

#include <opencv2/imgcodecs.hpp>

#include "framestylo/errors.hpp"

namespace framestylo {

ColorImage load_image(const std::string& path) {
    const cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
    if (bgr.empty()) {
        throw IoError("cannot decode image: " + path);
    }

    const std::size_t rows = static_cast<std::size_t>(bgr.rows);
    const std::size_t cols = static_cast<std::size_t>(bgr.cols);
    ColorImage out{Matrix(rows, cols), Matrix(rows, cols), Matrix(rows, cols)};
    for (std::size_t r = 0; r < rows; ++r) {
        const cv::Vec3b* src = bgr.ptr<cv::Vec3b>(static_cast<int>(r));
        double* red = out.red.row(r);
        double* green = out.green.row(r);
        double* blue = out.blue.row(r);
        for (std::size_t c = 0; c < cols; ++c) {
            blue[c] = src[c][0];
            green[c] = src[c][1];
            red[c] = src[c][2];
        }
    }
    return out;
}

} // namespace framestylo
