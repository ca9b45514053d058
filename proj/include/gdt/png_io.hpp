#pragma once

#include <filesystem>

#include "gdt/data.hpp"

namespace gdt {

// 8-bit RGB PNG. Alpha and gray inputs are converted to RGB on read.
ImageFrame read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const ImageFrame& image);

}  // namespace gdt
