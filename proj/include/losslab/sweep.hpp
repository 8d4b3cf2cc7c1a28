#pragma once

#include <Eigen/Dense>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "losslab/channel.hpp"
#include "losslab/encoder.hpp"
#include "losslab/loss.hpp"

namespace losslab {

enum class DecoderKind { Ml, TotalOrder, Trivial };

/// Decoder for a kind, resolved against a concrete channel (the ML rule is
/// the only channel-dependent one).
Decoder make_decoder(DecoderKind kind, const LinearCode& code, const Channel& channel);

enum class LossMethod { Exact, MonteCarlo };

/// One curve of a sweep: a scheme evaluated across the p grid.
struct SweepConfig {
  std::string code_label, encoder_label, decoder_label, value_label;
  EncoderMap encoder;  // carries the code
  DecoderKind decoder;
  Eigen::MatrixXd values;  // information-indexed
  LossMethod method = LossMethod::Exact;
  std::uint64_t trials = 100000;  // Monte Carlo only
  std::uint64_t seed = 0;
};

struct SweepRecord {
  double p = 0.0;
  std::string code, encoder, decoder, value_fn, method;
  double expected_loss = 0.0;
  std::optional<double> standard_error;  // empty for exact rows
};

struct SweepReport {
  std::vector<SweepRecord> records;  // grid-major, then configuration order
};

/// Evaluates every configuration at every grid point. Cells are independent
/// and may be computed by several workers; the report order is fixed by
/// (grid index, configuration index) either way.
SweepReport sweep_losses(const std::vector<double>& p_grid,
                         const std::vector<SweepConfig>& configs, int threads = 1);

/// Locale-independent CSV, '\n' line endings, shortest round-trip doubles.
/// Header: p,code,encoder,decoder,value_fn,method,expected_loss,stderr
void write_csv(const SweepReport& report, std::ostream& out);

/// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

/// Inclusive grid start, start+step, ... up to stop (within one part in 1e9
/// of a step). Requires step > 0 and stop >= start.
std::vector<double> parse_grid(double start, double stop, double step);

}  // namespace losslab
