#ifndef RKH_TYPES_HPP
#define RKH_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace rkh {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// bit k set <=> edge k present
using EdgeSet = std::uint64_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = MatrixX<std::int64_t>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int popcount(EdgeSet s) { return __builtin_popcountll(s); }

}  // namespace rkh

namespace Eigen {
template <>
struct NumTraits<rkh::BigInt> : GenericNumTraits<rkh::BigInt> {
  using Real = rkh::BigInt;
  using NonInteger = rkh::BigInt;
  using Literal = rkh::BigInt;
  using Nested = rkh::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 8,
    MulCost = 16
  };
};
}  // namespace Eigen

#endif
