#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "collusion/error.hpp"

namespace collusion::binary {

// Host byte order; containers are not meant to move between architectures.
template <typename T>
void put(std::ostream& out, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& in) {
  static_assert(std::is_trivially_copyable_v<T>);
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    throw InputError("truncated model container");
  }
  return v;
}

inline void put_string(std::ostream& out, const std::string& s) {
  put<std::uint64_t>(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string get_string(std::istream& in) {
  const auto n = get<std::uint64_t>(in);
  if (n > (1u << 20)) throw InputError("corrupt string length in model container");
  std::string s(n, '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(n))) {
    throw InputError("truncated model container");
  }
  return s;
}

inline void put_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  put<std::int64_t>(out, m.rows());
  put<std::int64_t>(out, m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) put<double>(out, m(i, j));
  }
}

inline Eigen::MatrixXd get_matrix(std::istream& in) {
  const auto rows = get<std::int64_t>(in);
  const auto cols = get<std::int64_t>(in);
  if (rows < 0 || cols < 0 || rows * cols > (std::int64_t{1} << 28)) {
    throw InputError("corrupt matrix shape in model container");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = get<double>(in);
  }
  return m;
}

inline void put_vector(std::ostream& out, const Eigen::VectorXd& v) {
  put_matrix(out, Eigen::MatrixXd(v));
}

inline Eigen::VectorXd get_vector(std::istream& in) {
  Eigen::MatrixXd m = get_matrix(in);
  if (m.cols() != 1) throw InputError("expected a vector in model container");
  return m.col(0);
}

}  // namespace collusion::binary
