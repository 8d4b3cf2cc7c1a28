#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "losslab/decoder.hpp"
#include "losslab/encoder.hpp"

namespace losslab {

/// Grayscale raster of k-bit pixel indices, row-major. Index r stands for
/// brightness r / (2^k - 1).
struct GrayImage {
  int width = 0, height = 0;
  int depth = 8;  // bits per pixel, 1..8
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const { return pixels.size(); }
  std::uint8_t max_index() const { return static_cast<std::uint8_t>((1 << depth) - 1); }
};

GrayImage make_image(int width, int height, int depth);

/// Malformed netpbm input; `offset` is the byte position of the problem.
class PgmError : public std::runtime_error {
 public:
  PgmError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Reads a P2 (ASCII) or P5 (binary) PGM with maxval <= 255 and optional
/// '#' comment lines in the header. Pixels are the raw sample values; the
/// result always has depth 8 (re-quantization is explicit via quantize).
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::string& bytes);

/// Serializes as binary P5 with maxval 2^depth - 1. Lossless round trip at
/// matching depth.
std::string write_pgm(const GrayImage& img);

/// Uniform-level re-quantization r = round(v (2^k - 1) / 255) of a depth-8
/// image, and its section v = round(r 255 / (2^k - 1)) back to depth 8.
/// quantize(dequantize(img)) is the identity on k-bit images.
GrayImage quantize(const GrayImage& img, int k);
GrayImage dequantize(const GrayImage& img);

/// LSB-first binary expansion of a pixel index, shared with the word-integer
/// maps of the GF(2) layer.
Word pixel_to_word(int r, int k);
int word_to_pixel(const Word& x);

/// Average of per-pixel squared normalized brightness differences, in [0,1].
double image_mse(const GrayImage& a, const GrayImage& b);

struct TransmissionStats {
  std::size_t pixel_count = 0;
  std::size_t wrong_pixels = 0;
  std::uint64_t bit_flips = 0;  // channel bit flips across all pixels
  double mse = 0.0;
  std::uint64_t seed = 0;
};

struct TransmissionResult {
  GrayImage decoded;
  TransmissionStats stats;
};

/// Per-pixel coding-transmission-decoding over a BMSC with crossover p.
/// Pixel i uses substream(seed, i) for its channel noise and tie draws, so
/// the output is byte-identical for any worker count.
TransmissionResult transmit_image(const GrayImage& img, const EncoderMap& encoder,
                                  const Decoder& decoder, double p,
                                  std::uint64_t seed, int threads = 1);

/// Binary P6 overlay: pixels decoded correctly are purple RGB(128, 0, 128);
/// wrong pixels keep their decoded gray value on all three channels.
std::string diff_highlight(const GrayImage& original, const GrayImage& decoded);

}  // namespace losslab
