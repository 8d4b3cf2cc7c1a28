#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "losslab/image.hpp"
#include "losslab/rng.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = losslab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("losslab-test-" + std::to_string(losslab::SplitMix64(::getpid()).next() >> 16));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string make_test_pgm(const TempDir& dir, int w, int h) {
  losslab::GrayImage img = losslab::make_image(w, h, 8);
  losslab::SplitMix64 rng(6021);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.next_below(256));
  const std::string path = dir.file("input.pgm");
  std::ofstream(path, std::ios::binary) << losslab::write_pgm(img);
  return path;
}

}  // namespace

TEST_CASE("sweep command") {
  TempDir dir;
  SUBCASE("row count and schema") {
    const std::string out = dir.file("sweep.csv");
    const Run r = cli({"sweep", "--code", "hamming:3", "--encoder", "lex", "--decoder",
                       "ml,total", "--value", "mse", "--p-grid", "0.1:0.3:0.1", "--out", out});
    CHECK(r.code == 0);
    const std::string csv = slurp(out);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "p,code,encoder,decoder,value_fn,method,expected_loss,stderr");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 6);  // 3 grid points x 2 decoders
  }
  SUBCASE("byte-identical reruns and worker independence") {
    const std::string a = dir.file("a.csv"), b = dir.file("b.csv"), c = dir.file("c.csv");
    const std::vector<std::string> base = {"sweep",   "--code", "c3",          "--encoder",
                                           "lex",     "--decoder", "ml,total", "--value",
                                           "mse",     "--p-grid",  "0.05:0.45:0.05"};
    auto with = [&](const std::string& out, const std::string& threads) {
      std::vector<std::string> args = base;
      args.insert(args.end(), {"--out", out, "--threads", threads});
      return cli(args);
    };
    CHECK(with(a, "1").code == 0);
    CHECK(with(b, "1").code == 0);
    CHECK(with(c, "4").code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
  }
  SUBCASE("crossing endpoints visible through the CLI") {
    const std::string out = dir.file("x.csv");
    const Run r = cli({"sweep", "--code", "hamming:3", "--encoder", "lex", "--decoder",
                       "ml,total", "--value", "mse", "--p-grid", "0.01:0.49:0.48", "--out", out});
    CHECK(r.code == 0);
    std::istringstream lines(slurp(out));
    std::string header, ml_low, total_low, ml_high, total_high;
    std::getline(lines, header);
    std::getline(lines, ml_low);
    std::getline(lines, total_low);
    std::getline(lines, ml_high);
    std::getline(lines, total_high);
    auto loss = [](const std::string& row) {
      const auto last_comma = row.find_last_of(',');
      const auto prev_comma = row.find_last_of(',', last_comma - 1);
      return std::stod(row.substr(prev_comma + 1, last_comma - prev_comma - 1));
    };
    CHECK(loss(ml_low) < loss(total_low));    // ML wins at p = 0.01
    CHECK(loss(ml_high) > loss(total_high));  // ordered decoder wins at p = 0.49
  }
  SUBCASE("monte carlo rows carry a standard error") {
    const Run r = cli({"sweep", "--code", "identity:4", "--encoder", "gray", "--decoder",
                       "trivial", "--value", "mse", "--p", "0.2", "--method", "mc", "--trials",
                       "2000", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",mc,") != std::string::npos);
    CHECK(r.out.back() != ',');  // stderr field is populated
  }
  SUBCASE("usage errors") {
    CHECK(cli({"sweep", "--code", "nosuch", "--p", "0.1"}).code == 2);
    CHECK(cli({"sweep", "--code", "hamming:3", "--encoder", "gray", "--p", "0.1"}).code == 2);
    CHECK(cli({"sweep", "--code", "hamming:3", "--decoder", "trivial", "--p", "0.1"}).code == 2);
    CHECK(cli({"sweep", "--code", "hamming:3"}).code == 2);  // no grid and no p
    CHECK(cli({"sweep", "--code", "hamming:5", "--p", "0.1"}).code == 2);  // too large for exact
    CHECK(cli({"nosuchcommand"}).code == 2);
  }
  SUBCASE("io errors") {
    CHECK(cli({"sweep", "--code", "hamming:3", "--p", "0.1", "--out",
               "/nonexistent-dir/x.csv"}).code == 3);
  }
}

TEST_CASE("image command") {
  TempDir dir;
  const std::string input = make_test_pgm(dir, 120, 100);

  SUBCASE("noiseless run reproduces the quantized input") {
    const std::string dec = dir.file("dec.pgm"), diff = dir.file("diff.ppm");
    const Run r = cli({"image", "--in", input, "--decoded", dec, "--diff", diff, "--code",
                       "hamming:3", "--encoder", "lex", "--decoder", "ml", "--p", "0",
                       "--seed", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("wrong=0 ") != std::string::npos);
    CHECK(r.out.find("mse=0 ") != std::string::npos);
    const losslab::GrayImage original =
        losslab::quantize(losslab::read_pgm(slurp(input)), 4);
    CHECK(slurp(dec) == losslab::write_pgm(original));
    // fully purple diff
    const std::string d = slurp(diff);
    std::size_t purple = 0;
    for (std::size_t i = d.size() - 3 * original.pixel_count(); i < d.size(); i += 3)
      purple += static_cast<unsigned char>(d[i]) == 128 &&
                static_cast<unsigned char>(d[i + 1]) == 0 &&
                static_cast<unsigned char>(d[i + 2]) == 128;
    CHECK(purple == original.pixel_count());
  }
  SUBCASE("deterministic across reruns and worker counts") {
    const std::string d1 = dir.file("d1.pgm"), d2 = dir.file("d2.pgm"), d3 = dir.file("d3.pgm");
    auto go = [&](const std::string& out, const char* threads) {
      return cli({"image", "--in", input, "--decoded", out, "--code", "hamming:3",
                  "--encoder", "lex", "--decoder", "total", "--p", "0.35", "--seed", "11",
                  "--threads", threads});
    };
    CHECK(go(d1, "1").code == 0);
    CHECK(go(d2, "1").code == 0);
    CHECK(go(d3, "5").code == 0);
    CHECK(slurp(d1) == slurp(d2));
    CHECK(slurp(d1) == slurp(d3));
  }
  SUBCASE("uncoded wrong-pixel fraction near 1 - 0.8^4") {
    const Run r = cli({"image", "--in", input, "--code", "identity:4", "--encoder", "lex",
                       "--decoder", "trivial", "--p", "0.2", "--seed", "31"});
    CHECK(r.code == 0);
    const auto pos = r.out.find("wrong_fraction=");
    REQUIRE(pos != std::string::npos);
    const double frac = std::stod(r.out.substr(pos + 15));
    CHECK(std::abs(frac - 0.5904) < 4 * std::sqrt(0.5904 * 0.4096 / 12000.0));
  }
  SUBCASE("stats file written when requested") {
    const std::string stats = dir.file("stats.txt");
    const Run r = cli({"image", "--in", input, "--stats", stats, "--code", "identity:4",
                       "--encoder", "gray", "--decoder", "trivial", "--p", "0.1"});
    CHECK(r.code == 0);
    CHECK(slurp(stats) == r.out);
  }
  SUBCASE("errors") {
    CHECK(cli({"image", "--in", dir.file("absent.pgm")}).code == 3);
    CHECK(cli({"image", "--code", "hamming:3"}).code == 2);          // missing --in
    CHECK(cli({"image", "--in", input, "--code", "c4"}).code == 2);  // k = 11 > 8 bits
    const std::string junk = dir.file("junk.pgm");
    std::ofstream(junk) << "P5\n3 3\n255\nab";  // truncated raster
    CHECK(cli({"image", "--in", junk}).code == 3);
  }
}

TEST_CASE("verify command") {
  CHECK(cli({"verify", "h-closed-form"}).code == 0);
  CHECK(cli({"verify", "proposition"}).code == 0);
  CHECK(cli({"verify", "bayes-hamming"}).code == 0);
  CHECK(cli({"verify", "nosuch"}).code == 2);
  const Run r = cli({"verify", "theorem1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ok   theorem1/hamming:3") != std::string::npos);
  CHECK(r.out.find("min_margin_reward") != std::string::npos);
}

TEST_CASE("seed default comes from the environment") {
  TempDir dir;
  const std::string input = make_test_pgm(dir, 24, 16);
  ::setenv("LOSSLAB_SEED", "123", 1);
  const Run env_run = cli({"image", "--in", input, "--code", "identity:4", "--encoder", "lex",
                           "--decoder", "trivial", "--p", "0.3"});
  ::unsetenv("LOSSLAB_SEED");
  const Run flag_run = cli({"image", "--in", input, "--code", "identity:4", "--encoder", "lex",
                            "--decoder", "trivial", "--p", "0.3", "--seed", "123"});
  CHECK(env_run.code == 0);
  CHECK(env_run.out == flag_run.out);
  CHECK(env_run.out.find("seed=123") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({}).code == 2);  // a subcommand is required
}
