#pragma once

#include <Eigen/Dense>

#include "losslab/encoder.hpp"

namespace losslab {

// Error value functions over an information set of 2^k indices, held as
// dense 2^k x 2^k tables. Entry (r, t) is the cost of the pair
// (sent = iota_r, decoded = iota_t); all entries are non-negative.

/// 0 on the diagonal, 1 elsewhere. Expected loss with this table is the
/// word error probability.
Eigen::MatrixXd indicator_value(int k);

/// The complement table 1 - indicator: rewards correct decoding. Used by the
/// decoder-relevance checks.
Eigen::MatrixXd reward_equal_value(int k);

/// Squared brightness error mu_2: value (r, t) = ((r - t) / (2^k - 1))^2.
/// Not invariant under GF(2) translations.
Eigen::MatrixXd squared_error_value(int k);

/// delta at one ordered information pair, 0 elsewhere.
Eigen::MatrixXd point_mass_value(int k, std::uint64_t r, std::uint64_t t, double delta);

/// The translation-invariant table nu(x, y) = tilde[x XOR y] built from a
/// one-argument table over information words (tilde has 2^k entries).
Eigen::MatrixXd translation_invariant_value(int k, const Eigen::VectorXd& tilde);

/// One-argument bit-error table: tilde[x] = weight(x) / k. The induced
/// two-argument table prices a decoding by its fraction of wrong
/// information bits.
Eigen::VectorXd ber_tilde(int k);
Eigen::MatrixXd ber_value(int k);

/// nu(x+z, y+z) = nu(x, y) for all x, y, z; exhaustive, k <= 8.
bool is_translation_invariant_value(const Eigen::MatrixXd& values);

/// tilde(x) = nu(x, 0) of a translation-invariant table.
Eigen::VectorXd tilde_of(const Eigen::MatrixXd& values);

/// One-argument values over the codewords of f's code, in canonical
/// codeword order: tilde_f(c) = tilde(f^-1(c)). For a linear f this is the
/// pushforward of a translation-invariant table.
Eigen::VectorXd codeword_tilde(const EncoderMap& f, const Eigen::VectorXd& tilde);

}  // namespace losslab
