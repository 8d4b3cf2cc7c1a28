#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "losslab/channel.hpp"
#include "losslab/code.hpp"
#include "losslab/rng.hpp"

namespace losslab {

/// Decoding decision for one received word: the set of tied codewords, each
/// carrying mass 1/support.size(). Every decoder here produces uniform tie
/// sets, so a point mass is a singleton support.
struct Decision {
  std::vector<int> support;  // canonical codeword indices, ascending

  double mass() const { return 1.0 / static_cast<double>(support.size()); }
  bool is_point_mass() const { return support.size() == 1; }
  /// Deterministic representative: the smallest tied codeword index.
  int modal() const { return support.front(); }
};

/// A decoder as a probability-weighted decision rule y -> Decision. Decisions
/// are computed per query; rules are immutable and cheap to copy.
class Decoder {
 public:
  using Rule = std::function<Decision(const Word&)>;

  Decoder(LinearCode code, std::string label, Rule rule);

  const LinearCode& code() const { return *code_; }
  const std::string& label() const { return label_; }

  Decision decide(const Word& y) const;
  /// Resolves ties by a uniform draw from `rng`; the stream is consumed only
  /// when a tie is present.
  int decide_sampled(const Word& y, SplitMix64& rng) const;

 private:
  std::shared_ptr<const LinearCode> code_;
  std::string label_;
  Rule rule_;
};

/// Maximum-likelihood decoder: uniform over argmax_c P(y|c). Uses a
/// syndrome table of minimum-weight coset leaders when the channel's ML rule
/// reduces to minimum Hamming distance (BMSC with p < 1/2), and brute force
/// over codewords otherwise.
Decoder ml_decoder(const LinearCode& code, const Channel& channel);

/// Nearest-neighbor decoder for an arbitrary metric: uniform over
/// argmin_c metric(y, c), by brute force over the codeword list.
Decoder nn_decoder(const LinearCode& code,
                   std::function<int(const Word&, const Word&)> metric,
                   std::string label = "nn");

/// Nearest-neighbor decoder under the total-order metric d_T, via suffix
/// matching against a leading-index echelon basis. O(k) per query; agrees
/// exactly with nn_decoder(code, total_order_distance).
///
/// The tie set for a received word y is the coset c + C_m of the subcode
/// C_m of codewords supported below the first forced mismatch index m, so
/// its size is always a power of two.
Decoder total_order_decoder(const LinearCode& code);

/// Identity rule over the [k;k] full-space code: point mass on y.
Decoder trivial_decoder(int k);

/// The rule of `a` with the decisions at the two codeword inputs exchanged,
/// everything else unchanged. A decoder that fixes its codewords becomes
/// c1 -> c2, c2 -> c1; applying the swap twice restores `a`.
Decoder swap_decoder(const Decoder& a, const Word& c1, const Word& c2);

/// The same rule served from a materialized table of all 2^n decisions
/// (n <= 16). Worthwhile when a rule is queried many times per word, as in
/// image transmission.
Decoder precompute_decisions(const Decoder& a);

/// Fractional decision regions: for each codeword index, the list of
/// (received word, mass) pairs with positive mass. Enumerates all 2^n words.
std::vector<std::vector<std::pair<Word, double>>> decision_regions(const Decoder& a);

struct DisagreementSets {
  std::vector<Word> v1;  // {y : a(y) = c2, b(y) = c1}
  std::vector<Word> v2;  // {y : a(y) = c1, b(y) = c2}
  bool tie_free = true;  // false when a member was classified by modal choice
};

/// The disagreement sets of two decoders at a codeword pair. Ties at a
/// member word are resolved by the modal codeword and reported.
DisagreementSets disagreement_sets(const Decoder& a, const Decoder& b,
                                   const Word& c1, const Word& c2);

}  // namespace losslab
