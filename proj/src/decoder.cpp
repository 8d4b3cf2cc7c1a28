#include "losslab/decoder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace losslab {

namespace {

// codeword index by value, against a shared code; decode hot paths avoid
// re-validating lengths
int index_of(const LinearCode& code, std::uint64_t value) {
  return code.codeword_index(Word(code.block_length(), value));
}

}  // namespace

Decoder::Decoder(LinearCode code, std::string label, Rule rule)
    : code_(std::make_shared<const LinearCode>(std::move(code))),
      label_(std::move(label)),
      rule_(std::move(rule)) {}

Decision Decoder::decide(const Word& y) const {
  if (y.length() != code_->block_length())
    throw std::invalid_argument("received word length does not match code");
  return rule_(y);
}

int Decoder::decide_sampled(const Word& y, SplitMix64& rng) const {
  Decision d = decide(y);
  if (d.support.size() == 1) return d.support.front();
  return d.support[rng.next_below(static_cast<std::uint32_t>(d.support.size()))];
}

Decoder ml_decoder(const LinearCode& code, const Channel& channel) {
  if (channel.block_length() != code.block_length())
    throw std::invalid_argument("channel block length does not match code");
  if (!code.has_codeword_list())
    throw std::out_of_range("ml_decoder requires an enumerable code (k <= 16)");
  const int n = code.block_length();
  const int k = code.dimension();

  if (channel.ml_is_min_distance() && n <= 20) {
    // syndrome table: every minimum-weight coset leader, per syndrome
    struct Table {
      std::vector<std::vector<std::uint64_t>> leaders;
      std::vector<int> best_weight;
    };
    auto tab = std::make_shared<Table>();
    const std::size_t cosets = std::size_t{1} << (n - k);
    tab->leaders.resize(cosets);
    tab->best_weight.assign(cosets, n + 1);
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
      const std::uint64_t s = code.syndrome(Word(n, e)).value();
      const int w = std::popcount(e);
      auto& best = tab->best_weight[static_cast<std::size_t>(s)];
      auto& list = tab->leaders[static_cast<std::size_t>(s)];
      if (w < best) {
        best = w;
        list.assign(1, e);
      } else if (w == best) {
        list.push_back(e);
      }
    }
    auto shared_code = std::make_shared<const LinearCode>(code);
    return Decoder(code, "ml", [shared_code, tab](const Word& y) {
      const std::uint64_t s = shared_code->syndrome(y).value();
      Decision d;
      for (std::uint64_t e : tab->leaders[static_cast<std::size_t>(s)])
        d.support.push_back(index_of(*shared_code, y.value() ^ e));
      std::sort(d.support.begin(), d.support.end());
      return d;
    });
  }

  // general channel: brute-force argmax of the likelihood, exact ties
  auto shared_code = std::make_shared<const LinearCode>(code);
  std::shared_ptr<const Channel> ch = channel.clone();
  return Decoder(code, "ml", [shared_code, ch](const Word& y) {
    const auto& cws = shared_code->codewords();
    Decision d;
    double best = -1.0;
    for (int i = 0; i < static_cast<int>(cws.size()); ++i) {
      const double v = ch->likelihood(cws[static_cast<std::size_t>(i)], y);
      if (v > best) {
        best = v;
        d.support.assign(1, i);
      } else if (v == best) {
        d.support.push_back(i);
      }
    }
    return d;
  });
}

Decoder nn_decoder(const LinearCode& code,
                   std::function<int(const Word&, const Word&)> metric,
                   std::string label) {
  auto shared_code = std::make_shared<const LinearCode>(code);
  auto m = std::make_shared<std::function<int(const Word&, const Word&)>>(std::move(metric));
  return Decoder(code, std::move(label), [shared_code, m](const Word& y) {
    const auto& cws = shared_code->codewords();
    Decision d;
    int best = -1;
    for (int i = 0; i < static_cast<int>(cws.size()); ++i) {
      const int v = (*m)(y, cws[static_cast<std::size_t>(i)]);
      if (best < 0 || v < best) {
        best = v;
        d.support.assign(1, i);
      } else if (v == best) {
        d.support.push_back(i);
      }
    }
    return d;
  });
}

Decoder total_order_decoder(const LinearCode& code) {
  const int n = code.block_length();
  const int k = code.dimension();
  if (!code.has_codeword_list())
    throw std::out_of_range("total_order_decoder requires an enumerable code (k <= 16)");

  // echelon basis by leading (highest set) index: distinct leading bits,
  // sorted descending, so suffix matching fixes one coefficient per row
  struct Basis {
    std::vector<std::uint64_t> rows;  // leading index strictly decreasing
    std::vector<int> lead;            // 1-based leading index per row
  };
  auto basis = std::make_shared<Basis>();
  for (int i = 0; i < k; ++i) {
    std::uint64_t v = code.generator().row_bits(i);
    bool changed = true;
    while (v != 0 && changed) {
      changed = false;
      for (std::uint64_t b : basis->rows)
        if (std::bit_width(v) == std::bit_width(b)) {
          v ^= b;
          changed = true;
          break;
        }
    }
    if (v != 0) basis->rows.push_back(v);
  }
  if (static_cast<int>(basis->rows.size()) != k)
    throw std::logic_error("generator rows were not independent");
  std::sort(basis->rows.begin(), basis->rows.end(), std::greater<>());
  basis->lead.reserve(basis->rows.size());
  for (std::uint64_t r : basis->rows) basis->lead.push_back(std::bit_width(r));

  auto shared_code = std::make_shared<const LinearCode>(code);
  return Decoder(code, "total", [shared_code, basis, n](const Word& y) {
    // match y from the top index down; pivot positions can always be matched,
    // the highest mismatch left is at a non-pivot position
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < basis->rows.size(); ++j)
      if (((c ^ y.value()) >> (basis->lead[j] - 1)) & 1) c ^= basis->rows[j];
    const int mismatch = std::bit_width(c ^ y.value());  // = d_T(y, c), 0 if y in C

    // tie set: c + span of rows confined strictly below the mismatch index
    std::size_t first_free = basis->rows.size();
    for (std::size_t j = 0; j < basis->rows.size(); ++j)
      if (basis->lead[j] < mismatch) {
        first_free = j;
        break;
      }
    const std::size_t t = basis->rows.size() - first_free;

    Decision d;
    d.support.reserve(std::size_t{1} << t);
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << t); ++combo) {
      std::uint64_t v = c;
      for (std::size_t j = 0; j < t; ++j)
        if ((combo >> j) & 1) v ^= basis->rows[first_free + j];
      d.support.push_back(index_of(*shared_code, v));
    }
    std::sort(d.support.begin(), d.support.end());
    return d;
  });
}

Decoder trivial_decoder(int k) {
  LinearCode code = identity_code(k);
  auto shared_code = std::make_shared<const LinearCode>(code);
  return Decoder(std::move(code), "trivial", [shared_code](const Word& y) {
    return Decision{{index_of(*shared_code, y.value())}};
  });
}

Decoder swap_decoder(const Decoder& a, const Word& c1, const Word& c2) {
  const LinearCode& code = a.code();
  if (code.codeword_index(c1) < 0 || code.codeword_index(c2) < 0)
    throw std::invalid_argument("swap endpoints must be codewords");
  if (c1 == c2) throw std::invalid_argument("swap endpoints must be distinct");
  Decoder base = a;
  // exchanging the decisions keeps the construction an involution; a
  // decoder that fixes its codewords then maps c1 -> c2 and c2 -> c1
  return Decoder(code, a.label() + "+swap", [base, c1, c2](const Word& y) {
    if (y == c1) return base.decide(c2);
    if (y == c2) return base.decide(c1);
    return base.decide(y);
  });
}

Decoder precompute_decisions(const Decoder& a) {
  const LinearCode& code = a.code();
  const int n = code.block_length();
  if (n > 16) throw std::out_of_range("decision table supports n <= 16");
  auto table = std::make_shared<std::vector<Decision>>();
  table->reserve(std::size_t{1} << n);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
    table->push_back(a.decide(Word(n, y)));
  return Decoder(code, a.label(),
                 [table](const Word& y) { return (*table)[y.value()]; });
}

std::vector<std::vector<std::pair<Word, double>>> decision_regions(const Decoder& a) {
  const LinearCode& code = a.code();
  const int n = code.block_length();
  if (n > 20) throw std::out_of_range("decision_regions enumerates only n <= 20");
  std::vector<std::vector<std::pair<Word, double>>> regions(code.size());
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Word wy(n, y);
    const Decision d = a.decide(wy);
    for (int ci : d.support)
      regions[static_cast<std::size_t>(ci)].emplace_back(wy, d.mass());
  }
  return regions;
}

DisagreementSets disagreement_sets(const Decoder& a, const Decoder& b,
                                   const Word& c1, const Word& c2) {
  const LinearCode& code = a.code();
  const int n = code.block_length();
  const int i1 = code.codeword_index(c1);
  const int i2 = code.codeword_index(c2);
  if (i1 < 0 || i2 < 0) throw std::invalid_argument("c1, c2 must be codewords");

  DisagreementSets out;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Word wy(n, y);
    const Decision da = a.decide(wy);
    const Decision db = b.decide(wy);
    const int ma = da.modal();
    const int mb = db.modal();
    if (ma == i2 && mb == i1) {
      out.v1.push_back(wy);
      if (!da.is_point_mass() || !db.is_point_mass()) out.tie_free = false;
    } else if (ma == i1 && mb == i2) {
      out.v2.push_back(wy);
      if (!da.is_point_mass() || !db.is_point_mass()) out.tie_free = false;
    }
  }
  return out;
}

}  // namespace losslab
