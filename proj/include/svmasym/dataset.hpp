#pragma once

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <string>

#include <Eigen/Dense>

#include "svmasym/errors.hpp"
#include "svmasym/model.hpp"
#include "svmasym/rng.hpp"

namespace svmasym {

/// Finite sample from the mixture: x_i = y_i mu e_1 + sigma z_i, z_i ~ N(0, I_p).
/// Rows [0, n1) carry label +1, rows [n1, n) label -1.
struct Dataset {
  Eigen::MatrixXd features;      // n x p
  Eigen::VectorXd labels;        // entries in {-1, +1}
  Eigen::VectorXd mu_direction;  // unit vector (first canonical axis)
  ModelParams params;
  std::uint64_t seed = 0;

  Eigen::Index n() const { return features.rows(); }
  Eigen::Index p() const { return features.cols(); }
};

inline Dataset generate_dataset(const ModelParams& params, int p, std::uint64_t seed) {
  params.validate();
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "generate_dataset: p must be >= 2");
  const long n = std::lround(params.delta * p);
  const long n1 = std::lround(params.pi1 * static_cast<double>(n));
  const long n0 = n - n1;
  if (n < 2 || n1 < 1 || n0 < 1) throw Error(ErrorCode::DegenerateSplit, "generate_dataset: a class would be empty");

  Dataset d;
  d.params = params;
  d.seed = seed;
  d.features.resize(n, p);
  d.labels.resize(n);
  d.mu_direction = Eigen::VectorXd::Unit(p, 0);

  rng::Xoshiro256pp gen(seed);
  rng::NormalSampler normal;
  for (long i = 0; i < n; ++i) {
    const double y = i < n1 ? 1.0 : -1.0;
    d.labels(i) = y;
    for (int j = 0; j < p; ++j) d.features(i, j) = params.sigma * normal(gen);
    d.features(i, 0) += y * params.mu;
  }
  return d;
}

namespace detail {

template <class T>
void write_le(std::ofstream& out, T v) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T read_le(std::ifstream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  if (!in) throw Error(ErrorCode::Io, "dataset file truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace detail

/// Flat little-endian layout: u64 n, u64 p, u64 seed, n*p row-major f64, n int8 labels.
inline void export_dataset(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  detail::write_le<std::uint64_t>(out, static_cast<std::uint64_t>(d.n()));
  detail::write_le<std::uint64_t>(out, static_cast<std::uint64_t>(d.p()));
  detail::write_le<std::uint64_t>(out, d.seed);
  for (Eigen::Index i = 0; i < d.n(); ++i)
    for (Eigen::Index j = 0; j < d.p(); ++j) detail::write_le<double>(out, d.features(i, j));
  for (Eigen::Index i = 0; i < d.n(); ++i) detail::write_le<std::int8_t>(out, d.labels(i) > 0 ? 1 : -1);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

/// Reads the flat layout back. Model parameters are not stored and stay default.
inline Dataset import_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  Dataset d;
  const auto n = static_cast<Eigen::Index>(detail::read_le<std::uint64_t>(in));
  const auto p = static_cast<Eigen::Index>(detail::read_le<std::uint64_t>(in));
  d.seed = detail::read_le<std::uint64_t>(in);
  d.features.resize(n, p);
  d.labels.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) d.features(i, j) = detail::read_le<double>(in);
  for (Eigen::Index i = 0; i < n; ++i) d.labels(i) = detail::read_le<std::int8_t>(in);
  d.mu_direction = Eigen::VectorXd::Unit(p, 0);
  return d;
}

}  // namespace svmasym
