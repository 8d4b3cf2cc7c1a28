#include "losslab/sweep.hpp"

#include <charconv>
#include <stdexcept>
#include <thread>

namespace losslab {

Decoder make_decoder(DecoderKind kind, const LinearCode& code, const Channel& channel) {
  switch (kind) {
    case DecoderKind::Ml:
      return ml_decoder(code, channel);
    case DecoderKind::TotalOrder:
      return total_order_decoder(code);
    case DecoderKind::Trivial:
      if (code.dimension() != code.block_length())
        throw std::invalid_argument("trivial decoder needs the full-space code");
      return trivial_decoder(code.dimension());
  }
  throw std::logic_error("unknown decoder kind");
}

namespace {

SweepRecord evaluate_cell(double p, const SweepConfig& cfg) {
  const LinearCode& code = cfg.encoder.code();
  const Bmsc channel(code.block_length(), p);
  const Decoder decoder = make_decoder(cfg.decoder, code, channel);

  SweepRecord rec;
  rec.p = p;
  rec.code = cfg.code_label;
  rec.encoder = cfg.encoder_label;
  rec.decoder = cfg.decoder_label;
  rec.value_fn = cfg.value_label;
  if (cfg.method == LossMethod::Exact) {
    rec.method = "exact";
    rec.expected_loss = expected_loss_exact(cfg.encoder, decoder, channel, cfg.values);
  } else {
    rec.method = "mc";
    const MonteCarloEstimate est = expected_loss_monte_carlo(
        cfg.encoder, decoder, channel, cfg.values, cfg.trials, cfg.seed);
    rec.expected_loss = est.estimate;
    rec.standard_error = est.standard_error;
  }
  return rec;
}

}  // namespace

SweepReport sweep_losses(const std::vector<double>& p_grid,
                         const std::vector<SweepConfig>& configs, int threads) {
  for (std::size_t i = 1; i < p_grid.size(); ++i)
    if (!(p_grid[i - 1] < p_grid[i]))
      throw std::invalid_argument("p grid must be strictly increasing");

  const std::size_t cells = p_grid.size() * configs.size();
  SweepReport report;
  report.records.resize(cells);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t cell = begin; cell < end; ++cell) {
      const std::size_t gi = cell / configs.size();
      const std::size_t ci = cell % configs.size();
      report.records[cell] = evaluate_cell(p_grid[gi], configs[ci]);
    }
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(cells)));
  if (workers == 1) {
    work(0, cells);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (cells + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = chunk * static_cast<std::size_t>(w);
      if (begin >= cells) break;
      pool.emplace_back(work, begin, std::min(cells, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }
  return report;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv(const SweepReport& report, std::ostream& out) {
  out << "p,code,encoder,decoder,value_fn,method,expected_loss,stderr\n";
  for (const SweepRecord& r : report.records) {
    out << format_double(r.p) << ',' << r.code << ',' << r.encoder << ','
        << r.decoder << ',' << r.value_fn << ',' << r.method << ','
        << format_double(r.expected_loss) << ',';
    if (r.standard_error) out << format_double(*r.standard_error);
    out << '\n';
  }
}

std::vector<double> parse_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (stop < start) throw std::invalid_argument("grid stop must be >= start");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = start + step * i;
    if (v > stop + step * 1e-9) break;
    grid.push_back(v);
  }
  return grid;
}

}  // namespace losslab
