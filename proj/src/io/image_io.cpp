#include "prognosis/io/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include "prognosis/errors.hpp"

namespace prognosis::io {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngImage {
  png_uint_32 width = 0, height = 0;
  int bit_depth = 0, color_type = 0;
  std::vector<std::vector<png_byte>> rows;
};

PngImage read_png_file(const std::filesystem::path& path, bool want_rgb) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw Error("cannot open image: " + path.string());

  png_byte sig[8];
  if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8))
    throw Error("not a PNG file: " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error("libpng initialization failed");
  }
  PngImage img;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error("failed to decode PNG: " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  img.width = png_get_image_width(png, info);
  img.height = png_get_image_height(png, info);
  img.color_type = png_get_color_type(png, info);
  img.bit_depth = png_get_bit_depth(png, info);

  if (want_rgb) {
    if (img.bit_depth == 16) png_set_strip_16(png);
    if (img.color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (img.color_type == PNG_COLOR_TYPE_GRAY || img.color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
    if (img.color_type == PNG_COLOR_TYPE_GRAY && img.bit_depth < 8)
      png_set_expand_gray_1_2_4_to_8(png);
    png_set_strip_alpha(png);
  } else {
    // Label masks: keep 16-bit samples, big-endian per PNG spec; swap below.
    if (img.color_type != PNG_COLOR_TYPE_GRAY)
      throw Error("mask must be a grayscale PNG: " + path.string());
    if (img.bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  }
  png_read_update_info(png, info);
  img.bit_depth = png_get_bit_depth(png, info);
  img.color_type = png_get_color_type(png, info);

  const std::size_t rowbytes = png_get_rowbytes(png, info);
  img.rows.assign(img.height, std::vector<png_byte>(rowbytes));
  std::vector<png_bytep> row_ptrs(img.height);
  for (png_uint_32 y = 0; y < img.height; ++y) row_ptrs[y] = img.rows[y].data();
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_png_file(const std::filesystem::path& path, png_uint_32 width, png_uint_32 height,
                    int bit_depth, int color_type, const std::vector<png_bytep>& rows) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw Error("cannot write image: " + path.string());
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw Error("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("failed to encode PNG: " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, const_cast<png_bytepp>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::pair<int, int> read_dims_sidecar(const std::filesystem::path& raw_path) {
  std::filesystem::path dims = raw_path;
  dims.replace_extension(".dims");
  std::ifstream in(dims);
  int w = 0, h = 0;
  if (!in || !(in >> w >> h) || w <= 0 || h <= 0)
    throw Error("missing or malformed dims sidecar: " + dims.string());
  return {w, h};
}

void write_dims_sidecar(const std::filesystem::path& raw_path, int w, int h) {
  std::filesystem::path dims = raw_path;
  dims.replace_extension(".dims");
  std::ofstream out(dims);
  out << w << ' ' << h << '\n';
  if (!out) throw Error("cannot write dims sidecar: " + dims.string());
}

}  // namespace

features::Patch read_patch_png(const std::filesystem::path& path) {
  PngImage img = read_png_file(path, true);
  features::Patch p;
  p.width = int(img.width);
  p.height = int(img.height);
  p.pixels.resize(3 * std::size_t(p.width) * p.height);
  for (png_uint_32 y = 0; y < img.height; ++y)
    std::memcpy(&p.pixels[3 * std::size_t(y) * p.width], img.rows[y].data(),
                3 * std::size_t(p.width));
  return p;
}

features::LabelMask read_mask_png(const std::filesystem::path& path) {
  PngImage img = read_png_file(path, false);
  features::LabelMask m;
  m.width = int(img.width);
  m.height = int(img.height);
  m.labels.resize(std::size_t(m.width) * m.height);
  for (png_uint_32 y = 0; y < img.height; ++y) {
    const png_byte* row = img.rows[y].data();
    for (png_uint_32 x = 0; x < img.width; ++x) {
      if (img.bit_depth == 16)
        m.labels[std::size_t(y) * m.width + x] =
            (std::uint32_t(row[2 * x]) << 8) | row[2 * x + 1];  // PNG stores big-endian
      else
        m.labels[std::size_t(y) * m.width + x] = row[x];
    }
  }
  return m;
}

void write_patch_png(const std::filesystem::path& path, const features::Patch& patch) {
  if (!patch.valid()) throw InvalidValue("invalid patch");
  std::vector<png_bytep> rows(patch.height);
  for (int y = 0; y < patch.height; ++y)
    rows[y] = const_cast<png_bytep>(&patch.pixels[3 * std::size_t(y) * patch.width]);
  write_png_file(path, patch.width, patch.height, 8, PNG_COLOR_TYPE_RGB, rows);
}

void write_mask_png(const std::filesystem::path& path, const features::LabelMask& mask) {
  if (!mask.valid()) throw InvalidValue("invalid mask");
  std::vector<std::vector<png_byte>> buf(mask.height, std::vector<png_byte>(2 * mask.width));
  std::vector<png_bytep> rows(mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      const std::uint32_t v = mask.at(x, y);
      if (v > 0xffff) throw InvalidValue("label exceeds 16-bit range");
      buf[y][2 * x] = png_byte(v >> 8);
      buf[y][2 * x + 1] = png_byte(v & 0xff);
    }
    rows[y] = buf[y].data();
  }
  write_png_file(path, mask.width, mask.height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

features::Patch read_patch_raw(const std::filesystem::path& path) {
  auto [w, h] = read_dims_sidecar(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open raw patch: " + path.string());
  features::Patch p;
  p.width = w;
  p.height = h;
  p.pixels.resize(3 * std::size_t(w) * h);
  in.read(reinterpret_cast<char*>(p.pixels.data()), std::streamsize(p.pixels.size()));
  if (std::size_t(in.gcount()) != p.pixels.size())
    throw Error("raw patch shorter than width*height*3: " + path.string());
  return p;
}

features::LabelMask read_mask_raw(const std::filesystem::path& path) {
  auto [w, h] = read_dims_sidecar(path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open raw mask: " + path.string());
  std::vector<unsigned char> bytes(2 * std::size_t(w) * h);
  in.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size()));
  if (std::size_t(in.gcount()) != bytes.size())
    throw Error("raw mask shorter than width*height*2: " + path.string());
  features::LabelMask m;
  m.width = w;
  m.height = h;
  m.labels.resize(std::size_t(w) * h);
  for (std::size_t i = 0; i < m.labels.size(); ++i)
    m.labels[i] = std::uint32_t(bytes[2 * i]) | (std::uint32_t(bytes[2 * i + 1]) << 8);
  return m;
}

void write_patch_raw(const std::filesystem::path& path, const features::Patch& patch) {
  if (!patch.valid()) throw InvalidValue("invalid patch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write raw patch: " + path.string());
  out.write(reinterpret_cast<const char*>(patch.pixels.data()),
            std::streamsize(patch.pixels.size()));
  write_dims_sidecar(path, patch.width, patch.height);
}

void write_mask_raw(const std::filesystem::path& path, const features::LabelMask& mask) {
  if (!mask.valid()) throw InvalidValue("invalid mask");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write raw mask: " + path.string());
  for (std::uint32_t v : mask.labels) {
    if (v > 0xffff) throw InvalidValue("label exceeds 16-bit range");
    const unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                                static_cast<unsigned char>(v >> 8)};
    out.write(reinterpret_cast<const char*>(b), 2);
  }
  write_dims_sidecar(path, mask.width, mask.height);
}

features::Patch read_patch(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".png") return read_patch_png(path);
  if (ext == ".raw" || ext == ".rgb") return read_patch_raw(path);
  throw Error("unsupported patch format: " + path.string());
}

features::LabelMask read_mask(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".png") return read_mask_png(path);
  if (ext == ".raw") return read_mask_raw(path);
  throw Error("unsupported mask format: " + path.string());
}

}  // namespace prognosis::io
