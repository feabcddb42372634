#include "rkh/smith.hpp"

namespace rkh {

SmithInvariants smith_invariants(const IntMatrix& m) {
  SmithInvariants out;
  try {
    auto s = smith_normal_form<std::int64_t>(m);
    out.rank = s.rank;
    for (auto d : s.diagonal)
      if (d > 1) out.divisors.emplace_back(d);
  } catch (const Overflow&) {
    auto s = smith_normal_form<BigInt>(m.cast<BigInt>());
    out = {};
    out.used_bigint = true;
    out.rank = s.rank;
    for (const auto& d : s.diagonal)
      if (d > 1) out.divisors.push_back(d);
  }
  return out;
}

}  // namespace rkh
