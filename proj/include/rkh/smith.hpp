#ifndef RKH_SMITH_HPP
#define RKH_SMITH_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rkh/types.hpp"

namespace rkh {

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("int64 overflow during elimination") {}
};

namespace detail {

template <typename S>
struct Arith {
  static S mul_sub(const S& a, const S& q, const S& b) { return a - q * b; }
  static S mul(const S& a, const S& b) { return a * b; }
  static S add(const S& a, const S& b) { return a + b; }
  static S neg(const S& a) { return -a; }
};

template <>
struct Arith<std::int64_t> {
  using S = std::int64_t;
  static constexpr S kLimit = S{1} << 62;
  static S guard(S x) {
    if (x >= kLimit || x <= -kLimit) throw Overflow();
    return x;
  }
  static S mul(S a, S b) {
    S r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
    return guard(r);
  }
  static S add(S a, S b) {
    S r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow();
    return guard(r);
  }
  static S mul_sub(S a, S q, S b) {
    S r;
    if (__builtin_mul_overflow(q, b, &r) || __builtin_sub_overflow(a, r, &r)) throw Overflow();
    return guard(r);
  }
  static S neg(S a) { return -a; }
};

template <typename S>
S abs_value(const S& x) {
  return x < 0 ? S(-x) : x;
}

// g = s*a + t*b with g = gcd(a, b) >= 0
template <typename S>
void extended_gcd(S a, S b, S& g, S& s, S& t) {
  S s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    S q = a / b;
    S r = a - q * b;
    a = b;
    b = r;
    S ns = s0 - q * s1;
    s0 = s1;
    s1 = ns;
    S nt = t0 - q * t1;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  g = a;
  s = s0;
  t = t0;
}

}  // namespace detail

template <typename Scalar>
struct SmithForm {
  // nonzero invariant factors, positive, each dividing the next
  std::vector<Scalar> diagonal;
  Eigen::Index rank = 0;
  // U * M * V = D when tracking was requested
  MatrixX<Scalar> U, V;
};

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(MatrixX<Scalar> a, bool track = false) {
  using A = detail::Arith<Scalar>;
  using Index = Eigen::Index;
  const Index m = a.rows(), n = a.cols();
  SmithForm<Scalar> out;
  if (track) {
    out.U = MatrixX<Scalar>::Identity(m, m);
    out.V = MatrixX<Scalar>::Identity(n, n);
  }

  auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (track) out.U.row(i).swap(out.U.row(j));
  };
  auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if (track) out.V.col(i).swap(out.V.col(j));
  };
  // row_i -= q * row_t
  auto row_op = [&](Index i, Index t, const Scalar& q) {
    for (Index j = t; j < n; ++j)
      if (a(t, j) != 0) a(i, j) = A::mul_sub(a(i, j), q, a(t, j));
    if (track)
      for (Index j = 0; j < m; ++j)
        if (out.U(t, j) != 0) out.U(i, j) = A::mul_sub(out.U(i, j), q, out.U(t, j));
  };
  // col_j -= q * col_t
  auto col_op = [&](Index j, Index t, const Scalar& q) {
    for (Index i = t; i < m; ++i)
      if (a(i, t) != 0) a(i, j) = A::mul_sub(a(i, j), q, a(i, t));
    if (track)
      for (Index i = 0; i < n; ++i)
        if (out.V(i, t) != 0) out.V(i, j) = A::mul_sub(out.V(i, j), q, out.V(i, t));
  };

  Index t = 0;
  for (; t < m && t < n; ++t) {
    // smallest nonzero entry of the active block
    Index pi = -1, pj = -1;
    Scalar best = 0;
    for (Index j = t; j < n && best != 1; ++j)
      for (Index i = t; i < m; ++i) {
        if (a(i, j) == 0) continue;
        Scalar v = detail::abs_value(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      const Scalar p = a(t, t);
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, Scalar(a(i, t) / p));
        if (a(i, t) != 0) clean = false;
      }
      if (clean && (p == 1 || p == -1) && !track) {
        for (Index j = t + 1; j < n; ++j) a(t, j) = 0;
        break;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, Scalar(a(t, j) / p));
        if (a(t, j) != 0) clean = false;
      }
      if (clean) break;
      // a remainder is now smaller than the pivot; move it into place
      Index bi = t, bj = t;
      Scalar bv = detail::abs_value(p);
      for (Index i = t + 1; i < m; ++i)
        if (a(i, t) != 0 && detail::abs_value(a(i, t)) < bv) {
          bv = detail::abs_value(a(i, t));
          bi = i;
          bj = t;
        }
      for (Index j = t + 1; j < n; ++j)
        if (a(t, j) != 0 && detail::abs_value(a(t, j)) < bv) {
          bv = detail::abs_value(a(t, j));
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }

  out.rank = t;
  std::vector<Scalar>& d = out.diagonal;
  d.resize(static_cast<std::size_t>(t));
  for (Index k = 0; k < t; ++k) {
    d[k] = a(k, k);
    if (d[k] < 0) {
      d[k] = A::neg(d[k]);
      if (track) out.U.row(k) *= Scalar(-1);
    }
  }

  // gcd/lcm pass gives the divisor chain
  for (Index i = 0; i < t; ++i)
    for (Index j = i + 1; j < t; ++j) {
      if (d[j] % d[i] == 0) continue;
      Scalar g, s, u;
      detail::extended_gcd(d[i], d[j], g, s, u);
      const Scalar ag = d[i] / g, bg = d[j] / g;
      if (track) {
        for (Index c = 0; c < m; ++c) {
          Scalar ri = out.U(i, c), rj = out.U(j, c);
          out.U(i, c) = A::add(A::mul(s, ri), A::mul(u, rj));
          out.U(j, c) = A::add(A::mul(A::neg(bg), ri), A::mul(ag, rj));
        }
        for (Index r = 0; r < n; ++r) {
          Scalar ci = out.V(r, i), cj = out.V(r, j);
          out.V(r, i) = A::add(ci, cj);
          out.V(r, j) = A::add(A::mul(A::neg(A::mul(u, bg)), ci), A::mul(A::mul(s, ag), cj));
        }
      }
      d[j] = A::mul(ag, d[j]);
      d[i] = g;
    }
  return out;
}

struct SmithInvariants {
  Eigen::Index rank = 0;
  std::vector<BigInt> divisors;  // invariant factors > 1
  bool used_bigint = false;
};

// int64 elimination with a transparent retry in arbitrary precision
SmithInvariants smith_invariants(const IntMatrix& m);

}  // namespace rkh

#endif
