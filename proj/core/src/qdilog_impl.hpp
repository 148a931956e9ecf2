#pragma once

#include <boost/multiprecision/float128.hpp>
#include <complex>
#include <vector>

#include "rtoda/qdilog.hpp"

namespace rtoda {

using real_ext = boost::multiprecision::float128;
using cplx_ext = std::complex<real_ext>;

namespace detail {

// Trapezoid tables for the defining integral on the line Im w = +delta.
// The line Im w = -delta uses the conjugate weights.
template <class R>
struct Table {
  R b{}, h{}, delta{}, stop{};
  int K = 0;
  std::vector<std::complex<R>> W;  // index k + K, k in [-K, K]
};

struct PhiTables {
  Table<double> d;
  bool has_ext = false;
  Table<real_ext> e;
};

template <class R>
const Table<R>& table(const QdContext& ctx);

template <class R>
std::complex<R> log_phib_t(std::complex<R> z, const QdContext& ctx);

template <class R>
R pi_v();

}  // namespace detail
}  // namespace rtoda
