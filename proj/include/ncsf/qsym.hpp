#pragma once

#include "ncsf/nsym.hpp"

#include <functional>
#include <map>
#include <string>

namespace ncsf {

// Quasi-symmetric functions in the monomial and fundamental bases, kept
// formal: M_a is an opaque symbol and only the QSym/NSym pairing
//   [M_a, h_b] = delta_{ab},   [F_a, s_b] = delta_{ab}
// is realized.  F_a = sum_{b <= a} M_b (forced by the two dualities and
// verified against the pairing in the tests).

QSymElement convert(const QSymElement& x, QSymBasis target);

QTScalar pair(const QSymElement& A, const NSymElement& B);
FactoredScalar pair(const QSymElementF& A, const NSymElement& B);

struct DualFamily {
    bool orthogonal = true;
    std::string witness;  // failing pair, when not orthogonal
    QTScalar diagonal;    // the common g with <A_a, A_b> = (-1)^{n+l(a)} delta_{a,b^c} g
    std::map<Composition, QSymElementF> dual;
};

// For an NSym family with <A_a, A_b> = (-1)^{n+l(a)} delta_{a,b^c} g for a
// common scalar g (checked, not assumed; g = 1 for s, h, H^q and
// prod_i (1-q^i t^{n-i}) for H^qt), produces the QSym family with
// [dual_a, A_b] = delta_{ab}:
//   dual_a = (-1)^{n+l(a^c)} (1/g) sum_b <A_{a^c}, s_b> F_b.
DualFamily dual_of(const std::function<NSymElement(const Composition&)>& family, int n);

// Duals of the Hall-Littlewood and Macdonald analogs, closed forms:
//   P^q_a  = sum_{b <= a} (-1)^{l(b)-l(a)} q^{c(a^c,b)} F_b
//   P^qt_a = prod_i 1/(1-q^i t^{n-i}) *
//            sum_b (-1)^{l(b)-l(a)} t^{c(a^c,b)} q^{c(rev a, b')} F_b
QSymElement P_q(const Composition& a);
QSymElementF P_qt(const Composition& a);

// Hivert's dual family G^q_a = sum_{b <= a} (-1)^{l(b)-l(a)} q^{n(rev Bre(b,a))} F_b.
QSymElement G_q_hivert(const Composition& a);

}  // namespace ncsf
