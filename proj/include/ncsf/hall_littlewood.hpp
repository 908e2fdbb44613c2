#pragma once

#include "ncsf/cyclotomic.hpp"
#include "ncsf/nsym.hpp"

#include <vector>

namespace ncsf {

// Row-adding operators on the ribbon basis and the one-parameter
// Hall-Littlewood analogs H^q they generate:
//
//   A_a(s_b) = s_{b.a},   B_a(s_b) = s_{b|a},
//   Atilde^q_a = A_a + q^n B_a on degree n > 0, and Atilde^q_a(1) = s_a,
//   H^q_a = sum_{b >= a} q^{c(a,b^c)} s_b
//         = Atilde^q_{a_l} ... Atilde^q_{a_1}(1).

NSymElement apply_A(const Composition& a, const NSymElement& x);
// Rejects input with a term on the empty index.
NSymElement apply_B(const Composition& a, const NSymElement& x);
// x must be homogeneous; the closed form of the Hopf q-twist of A_a.
NSymElement apply_Atilde_q(const Composition& a, const NSymElement& x);

// Direct sum formula, s basis.
NSymElement H_q(const Composition& a);
// Same family through the operator chain; equals H_q (asserted in tests).
NSymElement H_q_by_operators(const Composition& a);
// The same family in the variable t (used by the q,t-triangularity).
NSymElement H_t(const Composition& a);

// Hivert's compressed descent composition: for b coarser than a, the
// composition of l(a) with descents {#(D(a) intersect [1,d]) : d in D(b)}.
Composition bre(const Composition& a, const Composition& b);

// Hivert's Hall-Littlewood analog W^q_a = sum_{b >= a} q^{n(Bre(a,b)^c)} s_b,
// and its construction through the recurrence
// W_{a.(m)} = A_{(m)} W_a + q^{l(a)} B_{(m)} W_a.
NSymElement W_q(const Composition& a);
NSymElement W_q_by_recurrence(const Composition& a);

// Product rules, returned as formal H^q expansions (basis tag Hq):
//   H^q_a s_b   = sum_{g >= b} g^g_{ab}(q) (H^q_{a.g} + (1-q^{|a|}) H^q_{a|g})
//   H^q_a H^q_b = sum_{g >= b} f^g_{ab}(q) (H^q_{a.g} + (1-q^{|a|}) H^q_{a|g})
// with g^g_{ab} = (-1)^{l(b)-l(g)} q^{c(a.b,(a.g)^c)} and
//      f^g_{ab} = q^{c(b,g^c)} (1-q^{|a|})^{l(b)-l(g)}.
NSymElement product_Hq_s(const Composition& a, const Composition& b);
NSymElement product_Hq_Hq(const Composition& a, const Composition& b);

// Expands a formal H^q combination into the s basis.
NSymElement expand_Hq(const NSymElement& x);

struct RootOfUnityCheck {
    bool ok = true;
    Composition witness;      // first s index whose residue does not vanish
    std::string detail;       // the offending residue, for reporting
};

// Theorem: at a primitive r-th root of unity, H^q_a factors as the product of
// the H^q over any split a = a1 . a2 ... ak whose interior blocks have sizes
// divisible by r.  Verified exactly by reducing every coefficient of
// H^q_a - H^q_{a1} ... H^q_{ak} modulo Phi_r.  block_lengths gives the number
// of parts in each block; an invalid split is rejected.
RootOfUnityCheck check_root_of_unity_factorization(const Composition& a, int r,
                                                   const std::vector<int>& block_lengths);

// Every valid split of a for the theorem, the trivial one included.
std::vector<std::vector<int>> valid_splits(const Composition& a, int r);

}  // namespace ncsf
