#pragma once

#include "kauffman/notation.hpp"
#include "kauffman/tangle.hpp"

namespace kauffman {

/// The framed-diagram Kauffman polynomial of a 2-bridge notation, together
/// with the notation it came from and whether gcd reduction succeeded.
struct KauffmanResult {
    RatFunc value;
    FractionNotation notation;
    bool reduced = false;
};

/// Twist matrix for a horizontal region: diag(s^d, (-1/s)^d, alpha^-d).
/// d = 0 is permitted and yields the identity.
SkeinMatrix matrix_D(long d);

/// Twist matrix for an interior vertical region: M D(b) M.
SkeinMatrix matrix_B(long b);

/// Twist matrix for the first vertical region: the diagonal matrix with
/// entry i equal to m_i1 s^b + m_i2 (-1/s)^b + m_i3 alpha^-b.
SkeinMatrix matrix_B1(long b);

/// Closure row vector (0, 0, delta).
std::array<RatFunc, 3> closure_row();

/// The full matrix-product evaluation
///   (0,0,delta) B(b_{n+1}) D(d_n) ... B(b_2) D(d_1) B1(b_1) (1,1,1)^T
/// applied right to left as matrix-vector products. When reduce is set the
/// final value is gcd-reduced where feasible.
KauffmanResult kauffman_2bridge(const FractionNotation& f, bool reduce = true);

}  // namespace kauffman
