#pragma once

#include "ncsf/nsym.hpp"

#include <array>
#include <vector>

namespace ncsf {

// The nabla operator, defined by nabla(Htilde^qt_a) = q^{n(a')} t^{n(a)}
// Htilde^qt_a and computed in production through its closed action on
// ribbons:
//   nabla(s_a) = (-1)^{n+l(a)} q^{n(a')} t^{n(a^c)}
//                sum_{b <= a^c} prod_{i in D(a) cap D(b)} (t^i + q^{n-i}) s_b.

NSymElement nabla_s(const Composition& a);
NSymElement nabla(const NSymElement& x);

// nabla^{-1}(s_a) = (-1)^{l(a)+1} sum_{b >= a^c} q^{-n(b')} t^{-n(b^c)}
//                   prod_{i in D(b^c) cap D(a^c)} (t^i + q^{n-i}) s_b,
// with Laurent monomial prefactors.
NSymElement nabla_inverse(const NSymElement& x);

// The 2x2 factor chains of the transition-matrix lemmas.  Factor i (for
// i = 1..n-1) carries the parameters q^{n-i} and t^i; the expanded matrix has
// dimension 2^{n-1} and the entry at (r, s) multiplies factor entries chosen
// by the bits of r and s, following the tensor convention of the source
// lemmas (the second tensor factor indexes the blocks).
enum class ChainKind {
    HtildeToS,    // [[1, q^{n-i}], [1, t^i]]
    SToHtilde,    // [[t^i, -q^{n-i}], [-1, 1]]; true map carries prod 1/(t^i - q^{n-i})
    NablaOnHtilde,  // [[q^{n-i}, 0], [0, t^i]]
    NablaOnS      // [[0, -q^{n-i} t^i], [1, t^i + q^{n-i}]]
};

struct KroneckerChain {
    int n = 2;
    // row-major 2x2 factors, factor i-1 at index i-1
    std::vector<std::array<QTScalar, 4>> factors;
};

// 2 <= n <= 12.
KroneckerChain kron_chain(ChainKind kind, int n);

// Multiplies the chain out following the paper-style entry rule
// (A (x) B)[r][s] = B[r div n][s div n] * A[r mod n][s mod n].
std::vector<std::vector<QTScalar>> expand(const KroneckerChain& chain);

// <nabla f, nabla g> = (qt)^{binom(n,2)} <f, g>, checked exactly.
bool check_nabla_scalar_law(const NSymElement& f, const NSymElement& g);

// nabla(e_n) at t = 1, returned in the e basis; asserts the closed sum
// sum_a q^{n(a')} e_a.
NSymElement nabla_e_t1(int n);

}  // namespace ncsf
