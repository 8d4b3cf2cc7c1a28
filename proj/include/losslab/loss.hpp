#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "losslab/channel.hpp"
#include "losslab/decoder.hpp"
#include "losslab/encoder.hpp"
#include "losslab/values.hpp"

namespace losslab {

// Expected-loss engine over a uniform codeword prior P(c) = 1/M. Received
// words are enumerated in ascending integer order throughout, so every sum
// is bit-reproducible. Codeword-indexed value matrices follow the engine
// convention: entry (sent, decoded).

/// G_a(c, c') = (1/M) sum_y w(y, c) P(y|c') over canonical codeword indices;
/// first index is the decoded codeword (decision region), second the sent
/// one. All entries are non-negative and the total mass is 1.
Eigen::MatrixXd g_matrix(const Decoder& decoder, const Channel& channel);

/// Overall expected loss sum over G weighted by the codeword value matrix
/// (indexed (sent, decoded)). Exhaustive over 2^n received words; n <= 16.
double expected_loss_exact(const Decoder& decoder, const Channel& channel,
                           const Eigen::MatrixXd& codeword_values);

/// Same, with an information-indexed table pushed forward through f.
double expected_loss_exact(const EncoderMap& f, const Decoder& decoder,
                           const Channel& channel, const Eigen::MatrixXd& values);

/// Expected loss under the indicator table; equals the WEP of the scheme
/// for any encoder.
double word_error_probability(const Decoder& decoder, const Channel& channel);

/// H_a(c) = sum_y P(a(y) - c | y) P(y), one coefficient per codeword in
/// canonical order. Encoder-independent; sums to 1. For every linear
/// encoder f and translation-invariant value table,
/// expected loss = sum_c H_a(c) tilde_f(c).
Eigen::VectorXd h_coefficients(const Decoder& decoder, const Channel& channel);

/// Closed form for the ML-decoded binary Hamming code H(l):
/// (1-p)^n (s^w + (n-w) s^(w+1) + w s^(w-1)), s = p/(1-p), with the w = 0
/// convention that the last term vanishes. Requires 0 <= p < 1.
double hamming_h_closed_form(int l, int w, double p);

struct BayesCheck {
  bool is_bayes = false;
  // witness pair of canonical codeword indices with H(a) > H(b) but
  // tilde_f(a) > tilde_f(b); set only when is_bayes is false
  int witness_a = -1, witness_b = -1;
};

/// Bayes-encoder criterion for a linear encoder and a translation-invariant
/// value table: f is Bayes for (a, nu) iff no codeword pair is ordered
/// strictly oppositely by H_a and by tilde_f. Throws on a non-linear
/// encoder or a non-invariant table.
BayesCheck is_bayes_encoder(const EncoderMap& f, const Decoder& decoder,
                            const Channel& channel, const Eigen::MatrixXd& values);

struct BayesAssignment {
  std::vector<int> tilde_for_h;  // tilde_for_h[i] = tilde index paired with H index i
  double total = 0.0;
};

/// Pairs the i-th largest H with the i-th smallest tilde; by the
/// rearrangement inequality the resulting sum H . tilde is minimal over all
/// pairings.
BayesAssignment bayes_assignment(const Eigen::VectorXd& h, const Eigen::VectorXd& tilde);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
};

/// Unbiased simulation of the expected loss: sample a uniform information
/// index, transmit through the BMSC, decode (ties drawn uniformly), price
/// with the value table. Trial t uses substream(seed, t), so the result is
/// independent of evaluation order.
MonteCarloEstimate expected_loss_monte_carlo(const EncoderMap& f, const Decoder& decoder,
                                             const Bmsc& channel,
                                             const Eigen::MatrixXd& values,
                                             std::uint64_t trials, std::uint64_t seed);

/// Bit error probability (1/k) E[# wrong information bits], by direct
/// enumeration. Preconditions (checked): f linear; decoder decision rule
/// invariant under codeword translations; channel translation-invariant.
/// Equals expected_loss_exact with the ber table.
double bit_error_probability(const EncoderMap& f, const Decoder& decoder,
                             const Channel& channel);

struct Theorem1Report {
  double margin_reward = 0.0;     // E(a, reward) - E(b, reward), expected > 0
  double margin_indicator = 0.0;  // E(b, indicator) - E(a, indicator), expected > 0
  bool pass = false;              // both margins strictly positive
};

/// Decoder-relevance construction: a = ML, b = a with c1/c2 swapped. For a
/// reasonable channel both inequalities are strict. Throws when the channel
/// is not reasonable or c1, c2 are not distinct codewords.
Theorem1Report theorem1_check(const LinearCode& code, const Channel& channel,
                              const Word& c1, const Word& c2);

struct Theorem2Report {
  std::size_t v1_size = 0, v2_size = 0;
  bool tie_free = true;
  double hyp_margin_c1 = 0.0;  // sum_{V1} P(y|c1) - sum_{V2} P(y|c1)
  double hyp_margin_c2 = 0.0;  // sum_{V1} P(y|c2) - sum_{V2} P(y|c2)
  bool hypotheses_hold = false;
  double concl_margin_1 = 0.0;  // E(a1, nu1) - E(a2, nu1), expected > 0
  double concl_margin_2 = 0.0;  // E(a2, nu2) - E(a1, nu2), expected > 0
  bool conclusions_hold = false;
};

/// Decoder-disagreement construction over the sets V1, V2: evaluates the
/// hypothesis inequalities and, with the point-mass value functions of
/// magnitudes delta1 at (c1, c2) and delta2 at (c2, c1), the two opposite
/// strict orderings of the expected losses.
Theorem2Report theorem2_check(const Decoder& a1, const Decoder& a2,
                              const Channel& channel, const Word& c1, const Word& c2,
                              double delta1, double delta2);

}  // namespace losslab
