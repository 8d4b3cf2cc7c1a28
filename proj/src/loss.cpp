#include "losslab/loss.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace losslab {

namespace {

void check_engine_inputs(const Decoder& decoder, const Channel& channel) {
  if (decoder.code().block_length() != channel.block_length())
    throw std::invalid_argument("decoder and channel block lengths differ");
  if (decoder.code().block_length() > 16)
    throw std::out_of_range("exact enumeration supports n <= 16");
}

double ipow(double x, int e) {
  double v = 1.0;
  for (int i = 0; i < e; ++i) v *= x;
  return v;
}

// likelihood on raw word values, using the distance profile when available
struct Likelihood {
  const Channel& channel;
  int n;
  const std::vector<double>* profile;

  explicit Likelihood(const Channel& ch)
      : channel(ch), n(ch.block_length()), profile(ch.distance_profile()) {}

  double operator()(std::uint64_t sent, std::uint64_t received) const {
    if (profile) return (*profile)[static_cast<std::size_t>(std::popcount(sent ^ received))];
    return channel.likelihood(Word(n, sent), Word(n, received));
  }
};

// decision-rule translation invariance: supports translate with codewords
bool decoder_is_translation_invariant(const Decoder& decoder) {
  const LinearCode& code = decoder.code();
  const int n = code.block_length();
  if (n > 10) throw std::out_of_range("decoder invariance check supports n <= 10");
  const auto& cws = code.codewords();
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Decision base = decoder.decide(Word(n, y));
    for (const Word& z : cws) {
      if (z.is_zero()) continue;
      const Decision shifted = decoder.decide(Word(n, y ^ z.value()));
      if (shifted.support.size() != base.support.size()) return false;
      std::vector<int> expect;
      expect.reserve(base.support.size());
      for (int ci : base.support) {
        const Word c = cws[static_cast<std::size_t>(ci)] ^ z;
        expect.push_back(code.codeword_index(c));
      }
      std::sort(expect.begin(), expect.end());
      if (expect != shifted.support) return false;
    }
  }
  return true;
}

}  // namespace

Eigen::MatrixXd g_matrix(const Decoder& decoder, const Channel& channel) {
  check_engine_inputs(decoder, channel);
  const LinearCode& code = decoder.code();
  const int n = code.block_length();
  const auto& cws = code.codewords();
  const auto m = static_cast<Eigen::Index>(cws.size());

  const Likelihood like(channel);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Decision d = decoder.decide(Word(n, y));
    const double mass = d.mass();
    for (int dec : d.support)
      for (Eigen::Index sent = 0; sent < m; ++sent)
        g(dec, sent) += mass * like(cws[static_cast<std::size_t>(sent)].value(), y);
  }
  return g / static_cast<double>(m);
}

double expected_loss_exact(const Decoder& decoder, const Channel& channel,
                           const Eigen::MatrixXd& codeword_values) {
  const Eigen::MatrixXd g = g_matrix(decoder, channel);
  if (codeword_values.rows() != g.rows() || codeword_values.cols() != g.cols())
    throw std::invalid_argument("value matrix must be M x M");
  // G is indexed (decoded, sent); the value matrix (sent, decoded)
  return (g.array() * codeword_values.transpose().array()).sum();
}

double expected_loss_exact(const EncoderMap& f, const Decoder& decoder,
                           const Channel& channel, const Eigen::MatrixXd& values) {
  return expected_loss_exact(decoder, channel, induced_value(f, values));
}

double word_error_probability(const Decoder& decoder, const Channel& channel) {
  const auto m = static_cast<Eigen::Index>(decoder.code().size());
  const Eigen::MatrixXd indicator =
      Eigen::MatrixXd::Ones(m, m) - Eigen::MatrixXd::Identity(m, m);
  return expected_loss_exact(decoder, channel, indicator);
}

Eigen::VectorXd h_coefficients(const Decoder& decoder, const Channel& channel) {
  check_engine_inputs(decoder, channel);
  const LinearCode& code = decoder.code();
  const int n = code.block_length();
  const auto& cws = code.codewords();
  const auto m = static_cast<Eigen::Index>(cws.size());

  const Likelihood like(channel);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(m);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Decision d = decoder.decide(Word(n, y));
    const double mass = d.mass();
    for (int dec : d.support) {
      const std::uint64_t decv = cws[static_cast<std::size_t>(dec)].value();
      // P(a(y) - c | y) P(y) = P(y | a(y) - c) / M under the uniform prior
      for (Eigen::Index ci = 0; ci < m; ++ci)
        h(ci) += mass * like(decv ^ cws[static_cast<std::size_t>(ci)].value(), y);
    }
  }
  return h / static_cast<double>(m);
}

double hamming_h_closed_form(int l, int w, double p) {
  if (l < 2 || l > 6) throw std::out_of_range("hamming_h_closed_form requires 2 <= l <= 6");
  const int n = (1 << l) - 1;
  if (w < 0 || w > n) throw std::out_of_range("weight out of range");
  if (!(p >= 0.0 && p < 1.0))
    throw std::out_of_range("closed form requires 0 <= p < 1");
  const double s = p / (1.0 - p);
  double sum = ipow(s, w) + (n - w) * ipow(s, w + 1);
  if (w > 0) sum += w * ipow(s, w - 1);
  return ipow(1.0 - p, n) * sum;
}

BayesCheck is_bayes_encoder(const EncoderMap& f, const Decoder& decoder,
                            const Channel& channel, const Eigen::MatrixXd& values) {
  if (!is_linear_encoder(f))
    throw std::invalid_argument("is_bayes_encoder requires a linear encoder");
  if (!is_translation_invariant_value(values))
    throw std::invalid_argument("is_bayes_encoder requires a translation-invariant value table");

  const Eigen::VectorXd h = h_coefficients(decoder, channel);
  const Eigen::VectorXd tf = codeword_tilde(f, tilde_of(values));
  const auto m = h.size();
  constexpr double tol = 1e-12;  // absorbs enumeration round-off in H ties

  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      if (h(a) > h(b) + tol && tf(a) > tf(b) + tol)
        return {false, static_cast<int>(a), static_cast<int>(b)};
  return {true, -1, -1};
}

BayesAssignment bayes_assignment(const Eigen::VectorXd& h, const Eigen::VectorXd& tilde) {
  if (h.size() != tilde.size()) throw std::invalid_argument("lists must have equal length");
  const auto m = h.size();
  std::vector<int> by_h(static_cast<std::size_t>(m)), by_t(static_cast<std::size_t>(m));
  std::iota(by_h.begin(), by_h.end(), 0);
  std::iota(by_t.begin(), by_t.end(), 0);
  std::stable_sort(by_h.begin(), by_h.end(), [&](int a, int b) { return h(a) > h(b); });
  std::stable_sort(by_t.begin(), by_t.end(), [&](int a, int b) { return tilde(a) < tilde(b); });

  BayesAssignment out;
  out.tilde_for_h.assign(static_cast<std::size_t>(m), -1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int hi = by_h[static_cast<std::size_t>(i)];
    const int ti = by_t[static_cast<std::size_t>(i)];
    out.tilde_for_h[static_cast<std::size_t>(hi)] = ti;
    out.total += h(hi) * tilde(ti);
  }
  return out;
}

MonteCarloEstimate expected_loss_monte_carlo(const EncoderMap& f, const Decoder& decoder,
                                             const Bmsc& channel,
                                             const Eigen::MatrixXd& values,
                                             std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const auto m = static_cast<std::uint32_t>(f.size());
  if (values.rows() != static_cast<Eigen::Index>(m) ||
      values.cols() != static_cast<Eigen::Index>(m))
    throw std::invalid_argument("value table must be 2^k x 2^k");

  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = substream(seed, t);
    const std::uint64_t info = rng.next_below(m);
    const Word sent = f.encode(info);
    const Word received = channel.transmit(sent, rng);
    const int dec = decoder.decide_sampled(received, rng);
    const double loss = values(static_cast<Eigen::Index>(info),
                               static_cast<Eigen::Index>(f.info_of(dec)));
    sum += loss;
    sum_sq += loss * loss;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.estimate = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * est.estimate) / static_cast<double>(trials - 1));
    est.standard_error = std::sqrt(var / static_cast<double>(trials));
  }
  return est;
}

double bit_error_probability(const EncoderMap& f, const Decoder& decoder,
                             const Channel& channel) {
  check_engine_inputs(decoder, channel);
  if (!is_linear_encoder(f))
    throw std::invalid_argument("bit_error_probability requires a linear encoder");
  if (!decoder_is_translation_invariant(decoder))
    throw std::invalid_argument("decoder decision rule is not translation invariant");
  if (channel.block_length() <= 8 && !is_translation_invariant_channel(channel))
    throw std::invalid_argument("channel is not translation invariant");

  const LinearCode& code = decoder.code();
  const int n = code.block_length();
  const int k = code.dimension();
  const auto& cws = code.codewords();
  const auto m = cws.size();

  const Likelihood like(channel);
  double total = 0.0;
  for (std::size_t sent = 0; sent < m; ++sent) {
    const std::uint64_t info_sent = f.info_of(static_cast<int>(sent));
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      const double weight = like(cws[sent].value(), y);
      if (weight == 0.0) continue;
      const Decision d = decoder.decide(Word(n, y));
      double wrong_bits = 0.0;
      for (int dec : d.support)
        wrong_bits += std::popcount(info_sent ^ f.info_of(dec));
      total += weight * d.mass() * wrong_bits / k;
    }
  }
  return total / static_cast<double>(m);
}

Theorem1Report theorem1_check(const LinearCode& code, const Channel& channel,
                              const Word& c1, const Word& c2) {
  if (!code.contains(c1) || !code.contains(c2))
    throw std::invalid_argument("c1, c2 must be codewords");
  if (c1 == c2) throw std::invalid_argument("c1, c2 must be distinct");
  if (!is_reasonable(channel))
    throw std::invalid_argument("theorem1_check requires a reasonable channel");

  const Decoder a = ml_decoder(code, channel);
  const Decoder b = swap_decoder(a, c1, c2);
  const int k = code.dimension();
  const Eigen::MatrixXd reward = reward_equal_value(k);      // permutation-invariant:
  const Eigen::MatrixXd indicator = indicator_value(k);      // valid directly on codewords

  Theorem1Report rep;
  rep.margin_reward = expected_loss_exact(a, channel, reward) -
                      expected_loss_exact(b, channel, reward);
  rep.margin_indicator = expected_loss_exact(b, channel, indicator) -
                         expected_loss_exact(a, channel, indicator);
  rep.pass = rep.margin_reward > 0.0 && rep.margin_indicator > 0.0;
  return rep;
}

Theorem2Report theorem2_check(const Decoder& a1, const Decoder& a2,
                              const Channel& channel, const Word& c1, const Word& c2,
                              double delta1, double delta2) {
  const LinearCode& code = a1.code();
  const int i1 = code.codeword_index(c1);
  const int i2 = code.codeword_index(c2);
  if (i1 < 0 || i2 < 0) throw std::invalid_argument("c1, c2 must be codewords");
  if (i1 == i2) throw std::invalid_argument("c1, c2 must be distinct");
  if (!(delta1 > 0.0 && delta2 > 0.0))
    throw std::invalid_argument("point-mass magnitudes must be positive");

  const DisagreementSets sets = disagreement_sets(a1, a2, c1, c2);

  Theorem2Report rep;
  rep.v1_size = sets.v1.size();
  rep.v2_size = sets.v2.size();
  rep.tie_free = sets.tie_free;
  for (const Word& y : sets.v1) {
    rep.hyp_margin_c1 += channel.likelihood(c1, y);
    rep.hyp_margin_c2 += channel.likelihood(c2, y);
  }
  for (const Word& y : sets.v2) {
    rep.hyp_margin_c1 -= channel.likelihood(c1, y);
    rep.hyp_margin_c2 -= channel.likelihood(c2, y);
  }
  rep.hypotheses_hold = rep.hyp_margin_c1 > 0.0 && rep.hyp_margin_c2 > 0.0;

  const auto m = static_cast<Eigen::Index>(code.size());
  Eigen::MatrixXd nu1 = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd nu2 = Eigen::MatrixXd::Zero(m, m);
  nu1(i1, i2) = delta1;  // fires when c1 is sent and decoded as c2
  nu2(i2, i1) = delta2;
  rep.concl_margin_1 = expected_loss_exact(a1, channel, nu1) -
                       expected_loss_exact(a2, channel, nu1);
  rep.concl_margin_2 = expected_loss_exact(a2, channel, nu2) -
                       expected_loss_exact(a1, channel, nu2);
  rep.conclusions_hold = rep.concl_margin_1 > 0.0 && rep.concl_margin_2 > 0.0;
  return rep;
}

}  // namespace losslab
