#include "losslab/values.hpp"

#include <bit>
#include <stdexcept>

namespace losslab {

namespace {

Eigen::Index table_size(int k) {
  if (k < 1 || k > 16) throw std::out_of_range("value tables support 1 <= k <= 16");
  return Eigen::Index{1} << k;
}

}  // namespace

Eigen::MatrixXd indicator_value(int k) {
  const Eigen::Index m = table_size(k);
  return Eigen::MatrixXd::Ones(m, m) - Eigen::MatrixXd::Identity(m, m);
}

Eigen::MatrixXd reward_equal_value(int k) {
  return Eigen::MatrixXd::Identity(table_size(k), table_size(k));
}

Eigen::MatrixXd squared_error_value(int k) {
  const Eigen::Index m = table_size(k);
  const double den = static_cast<double>(m - 1);
  Eigen::MatrixXd v(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index t = 0; t < m; ++t) {
      const double diff = static_cast<double>(r - t) / den;
      v(r, t) = diff * diff;
    }
  return v;
}

Eigen::MatrixXd point_mass_value(int k, std::uint64_t r, std::uint64_t t, double delta) {
  const Eigen::Index m = table_size(k);
  if (r >= static_cast<std::uint64_t>(m) || t >= static_cast<std::uint64_t>(m))
    throw std::out_of_range("information index out of range");
  if (!(delta > 0.0)) throw std::invalid_argument("point mass must be positive");
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m);
  v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) = delta;
  return v;
}

Eigen::MatrixXd translation_invariant_value(int k, const Eigen::VectorXd& tilde) {
  const Eigen::Index m = table_size(k);
  if (tilde.size() != m) throw std::invalid_argument("tilde must have 2^k entries");
  if (tilde.minCoeff() < 0.0) throw std::invalid_argument("value functions are non-negative");
  Eigen::MatrixXd v(m, m);
  for (Eigen::Index x = 0; x < m; ++x)
    for (Eigen::Index y = 0; y < m; ++y) v(x, y) = tilde(x ^ y);
  return v;
}

Eigen::VectorXd ber_tilde(int k) {
  const Eigen::Index m = table_size(k);
  Eigen::VectorXd t(m);
  for (Eigen::Index x = 0; x < m; ++x)
    t(x) = static_cast<double>(std::popcount(static_cast<std::uint64_t>(x))) / k;
  return t;
}

Eigen::MatrixXd ber_value(int k) { return translation_invariant_value(k, ber_tilde(k)); }

bool is_translation_invariant_value(const Eigen::MatrixXd& values) {
  const Eigen::Index m = values.rows();
  if (values.cols() != m || m > (1 << 8))
    throw std::out_of_range("exhaustive invariance check supports k <= 8");
  for (Eigen::Index x = 0; x < m; ++x)
    for (Eigen::Index y = 0; y < m; ++y)
      for (Eigen::Index z = 1; z < m; ++z)
        if (values(x ^ z, y ^ z) != values(x, y)) return false;
  return true;
}

Eigen::VectorXd tilde_of(const Eigen::MatrixXd& values) { return values.col(0); }

Eigen::VectorXd codeword_tilde(const EncoderMap& f, const Eigen::VectorXd& tilde) {
  const auto m = static_cast<Eigen::Index>(f.size());
  if (tilde.size() != m) throw std::invalid_argument("tilde must have 2^k entries");
  Eigen::VectorXd out(m);
  for (Eigen::Index ci = 0; ci < m; ++ci)
    out(ci) = tilde(static_cast<Eigen::Index>(f.info_of(static_cast<int>(ci))));
  return out;
}

}  // namespace losslab
