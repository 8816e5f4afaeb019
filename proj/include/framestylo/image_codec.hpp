#pragma once

#include <string>

#include "framestylo/features.hpp"

namespace framestylo {

// Decodes a PNG/JPEG/TIFF file into planes of values in [0, 255].
// Grayscale files are expanded to three equal planes.
ColorImage load_image(const std::string& path);

} // namespace framestylo
