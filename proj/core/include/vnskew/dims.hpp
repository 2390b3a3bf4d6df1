#ifndef VNSKEW_DIMS_HPP
#define VNSKEW_DIMS_HPP

#include <stdexcept>

namespace vnskew {

/// Subsystem dimension pair with 1 <= m <= n.
struct Dims {
  long m;
  long n;

  Dims(long m_, long n_) : m(m_), n(n_) {
    if (m < 1 || m > n) throw std::invalid_argument("Dims: require 1 <= m <= n");
  }

  long mn() const { return m * n; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

}  // namespace vnskew

#endif  // VNSKEW_DIMS_HPP
