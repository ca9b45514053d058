#include "gdt/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace gdt {

ImageFrame read_png(const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw std::runtime_error("cannot read PNG " + path.string() + ": " + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw std::runtime_error("cannot decode PNG " + path.string() + ": " + msg);
  }
  ImageFrame frame = make_image(image.width, image.height);
  std::transform(buffer.begin(), buffer.end(), frame.rgb.begin(),
                 [](png_byte b) { return static_cast<double>(b); });
  return frame;
}

void write_png(const std::filesystem::path& path, const ImageFrame& frame) {
  if (frame.rgb.size() != frame.width * frame.height * 3) {
    throw std::invalid_argument("image buffer size does not match its dimensions");
  }
  std::vector<png_byte> buffer(frame.rgb.size());
  std::transform(frame.rgb.begin(), frame.rgb.end(), buffer.begin(), [](double v) {
    return static_cast<png_byte>(std::clamp(std::lround(v), 0L, 255L));
  });
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(frame.width);
  image.height = static_cast<png_uint_32>(frame.height);
  image.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&image, path.c_str(), 0, buffer.data(), 0, nullptr)) {
    throw std::runtime_error("cannot write PNG " + path.string() + ": " + image.message);
  }
}

}  // namespace gdt
