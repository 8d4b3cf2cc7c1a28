#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "losslab/gf2.hpp"
#include "losslab/rng.hpp"

namespace losslab {

/// A discrete channel over F_2^n x F_2^n, given by conditional probabilities
/// P(y received | x sent). Rows sum to 1.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual int block_length() const = 0;
  virtual double likelihood(const Word& sent, const Word& received) const = 0;
  virtual std::unique_ptr<Channel> clone() const = 0;

  /// True when the maximum-likelihood rule coincides with nearest-neighbor
  /// decoding under the Hamming metric for every code (likelihood a strictly
  /// decreasing function of Hamming distance).
  virtual bool ml_is_min_distance() const { return false; }

  /// Likelihoods indexed by Hamming distance when the channel factors that
  /// way (enumeration hot paths bypass the virtual call), else nullptr.
  virtual const std::vector<double>* distance_profile() const { return nullptr; }
};

/// Binary memoryless symmetric channel with crossover probability p:
/// P(y|x) = p^d (1-p)^(n-d), d = hamming_distance(x, y).
class Bmsc final : public Channel {
 public:
  Bmsc(int n, double p);

  int block_length() const override { return n_; }
  double crossover() const { return p_; }
  double likelihood(const Word& sent, const Word& received) const override;
  double likelihood_at_distance(int d) const { return by_distance_[static_cast<std::size_t>(d)]; }
  std::unique_ptr<Channel> clone() const override { return std::make_unique<Bmsc>(*this); }
  bool ml_is_min_distance() const override { return p_ < 0.5; }
  const std::vector<double>* distance_profile() const override { return &by_distance_; }

  /// Flips each bit independently with probability p.
  Word transmit(const Word& sent, SplitMix64& rng) const;

 private:
  int n_;
  double p_;
  std::vector<double> by_distance_;  // p^d (1-p)^(n-d) for d = 0..n
};

/// Fully tabulated channel, for small n. Row x of the table holds P(.|x).
class TableChannel final : public Channel {
 public:
  TableChannel(int n, Eigen::MatrixXd table);

  int block_length() const override { return n_; }
  double likelihood(const Word& sent, const Word& received) const override;
  std::unique_ptr<Channel> clone() const override { return std::make_unique<TableChannel>(*this); }
  const Eigen::MatrixXd& table() const { return table_; }

 private:
  int n_;
  Eigen::MatrixXd table_;
};

/// P(x|x) > P(y|x) for every x and every y != x. Exhaustive; n <= 10.
bool is_reasonable(const Channel& channel);

/// P(y|x) = P(y+z|x+z) for all x, y, z. Exhaustive; n <= 8.
bool is_translation_invariant_channel(const Channel& channel);

/// Same identity checked on `triples` uniformly sampled (x, y, z) triples.
bool is_translation_invariant_channel_sampled(const Channel& channel,
                                              int triples, SplitMix64& rng);

}  // namespace losslab
