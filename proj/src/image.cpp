#include "losslab/image.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <thread>

namespace losslab {

GrayImage make_image(int width, int height, int depth) {
  if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be positive");
  if (depth < 1 || depth > 8) throw std::invalid_argument("depth must be in [1, 8]");
  GrayImage img;
  img.width = width;
  img.height = height;
  img.depth = depth;
  img.pixels.assign(static_cast<std::size_t>(width) * height, 0);
  return img;
}

PgmError::PgmError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

std::size_t stream_pos(std::istream& in) {
  const auto pos = in.tellg();
  return pos < 0 ? 0 : static_cast<std::size_t>(pos);
}

// header token reader: skips whitespace and '#' comments
int next_header_int(std::istream& in, const char* what) {
  for (;;) {
    const int c = in.peek();
    if (c == EOF) throw PgmError(std::string("missing ") + what, stream_pos(in));
    if (std::isspace(c)) {
      in.get();
    } else if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      break;
    }
  }
  long v = 0;
  if (!(in >> v))
    throw PgmError(std::string("malformed ") + what, stream_pos(in));
  if (v < 0) throw PgmError(std::string(what) + " is negative", stream_pos(in));
  return static_cast<int>(v);
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || (m1 != '2' && m1 != '5'))
    throw PgmError("not a P2/P5 PGM file", 0);
  const bool binary = m1 == '5';

  const int width = next_header_int(in, "width");
  const int height = next_header_int(in, "height");
  const int maxval = next_header_int(in, "maxval");
  if (width < 1 || height < 1)
    throw PgmError("image dimensions must be positive", stream_pos(in));
  if (maxval < 1 || maxval > 255)
    throw PgmError("maxval must be in [1, 255]", stream_pos(in));

  GrayImage img = make_image(width, height, 8);
  if (binary) {
    const int sep = in.get();  // single whitespace byte after maxval
    if (sep == EOF || !std::isspace(sep))
      throw PgmError("missing raster separator", stream_pos(in));
    const std::size_t raster_start = stream_pos(in);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
      throw PgmError("truncated raster",
                     raster_start + static_cast<std::size_t>(in.gcount()));
  } else {
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      const int v = next_header_int(in, "sample");
      if (v > maxval)
        throw PgmError("sample exceeds maxval", stream_pos(in));
      img.pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    if (img.pixels[i] > maxval) throw PgmError("sample exceeds maxval", i);
  return img;
}

GrayImage read_pgm(const std::string& bytes) {
  std::istringstream in(bytes);
  return read_pgm(in);
}

std::string write_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " +
                    std::to_string(img.height) + "\n" +
                    std::to_string(static_cast<int>(img.max_index())) + "\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
  return out;
}

GrayImage quantize(const GrayImage& img, int k) {
  if (img.depth != 8) throw std::invalid_argument("quantize expects a depth-8 image");
  if (k < 1 || k > 8) throw std::invalid_argument("target depth must be in [1, 8]");
  GrayImage out = make_image(img.width, img.height, k);
  const int levels = (1 << k) - 1;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    // round-half-up of v * levels / 255
    const int v = img.pixels[i];
    out.pixels[i] = static_cast<std::uint8_t>((2 * v * levels + 255) / (2 * 255));
  }
  return out;
}

GrayImage dequantize(const GrayImage& img) {
  GrayImage out = make_image(img.width, img.height, 8);
  const int levels = (1 << img.depth) - 1;
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out.pixels[i] = static_cast<std::uint8_t>((2 * img.pixels[i] * 255 + levels) / (2 * levels));
  return out;
}

Word pixel_to_word(int r, int k) {
  if (r < 0) throw std::out_of_range("pixel index must be non-negative");
  return int_to_word(static_cast<std::uint64_t>(r), k);
}

int word_to_pixel(const Word& x) { return static_cast<int>(word_to_int(x)); }

double image_mse(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height || a.depth != b.depth)
    throw std::invalid_argument("images must have equal dimensions and depth");
  const double den = static_cast<double>((1 << a.depth) - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double diff = (static_cast<double>(a.pixels[i]) - b.pixels[i]) / den;
    sum += diff * diff;
  }
  return sum / static_cast<double>(a.pixels.size());
}

TransmissionResult transmit_image(const GrayImage& img, const EncoderMap& encoder,
                                  const Decoder& decoder, double p,
                                  std::uint64_t seed, int threads) {
  const int k = encoder.dimension();
  if (img.depth != k)
    throw std::invalid_argument("image depth does not match encoder dimension");
  const Bmsc channel(encoder.code().block_length(), p);
  // pixels vastly outnumber the 2^n possible received words
  const Decoder table_decoder = precompute_decisions(decoder);

  TransmissionResult result;
  result.decoded = make_image(img.width, img.height, k);
  result.stats.pixel_count = img.pixel_count();
  result.stats.seed = seed;

  struct Partial {
    std::size_t wrong = 0;
    std::uint64_t flips = 0;
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(img.pixel_count())));
  std::vector<Partial> partials(static_cast<std::size_t>(workers));

  auto work = [&](int w, std::size_t begin, std::size_t end) {
    Partial& acc = partials[static_cast<std::size_t>(w)];
    for (std::size_t i = begin; i < end; ++i) {
      SplitMix64 rng = substream(seed, i);
      const Word sent = encoder.encode(img.pixels[i]);
      const Word received = channel.transmit(sent, rng);
      const int dec = table_decoder.decide_sampled(received, rng);
      const auto out = static_cast<std::uint8_t>(encoder.info_of(dec));
      result.decoded.pixels[i] = out;
      acc.wrong += out != img.pixels[i];
      acc.flips += static_cast<std::uint64_t>(hamming_distance(sent, received));
    }
  };

  if (workers == 1) {
    work(0, 0, img.pixel_count());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (img.pixel_count() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = chunk * static_cast<std::size_t>(w);
      if (begin >= img.pixel_count()) break;
      pool.emplace_back(work, w, begin, std::min(img.pixel_count(), begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  for (const Partial& acc : partials) {
    result.stats.wrong_pixels += acc.wrong;
    result.stats.bit_flips += acc.flips;
  }
  result.stats.mse = image_mse(img, result.decoded);
  return result;
}

std::string diff_highlight(const GrayImage& original, const GrayImage& decoded) {
  if (original.width != decoded.width || original.height != decoded.height ||
      original.depth != decoded.depth)
    throw std::invalid_argument("images must have equal dimensions and depth");
  const GrayImage gray8 = dequantize(decoded);

  std::string out = "P6\n" + std::to_string(original.width) + " " +
                    std::to_string(original.height) + "\n255\n";
  out.reserve(out.size() + 3 * original.pixel_count());
  for (std::size_t i = 0; i < original.pixels.size(); ++i) {
    if (original.pixels[i] == decoded.pixels[i]) {
      out.push_back(static_cast<char>(128));
      out.push_back(static_cast<char>(0));
      out.push_back(static_cast<char>(128));
    } else {
      const char g = static_cast<char>(gray8.pixels[i]);
      out.push_back(g);
      out.push_back(g);
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace losslab
