#pragma once

#include "ncsf/nsym.hpp"

#include <map>
#include <string>
#include <utility>

namespace ncsf {

// The two-parameter family and its t-inverted twist:
//   H^qt_a      = sum_b t^{c(a,b^c)} q^{c(a',rev b)} s_b
//   Htilde^qt_a = t^{n(a)} H^{q,1/t}_a = sum_b t^{c(a,b)} q^{c(a',rev b)} s_b
NSymElement H_qt(const Composition& a);
NSymElement H_tilde_qt(const Composition& a);
// Parameter-swapped family H^tq.
NSymElement H_tq(const Composition& a);

// The symmetry relations
//   H^tq_a = omega'(H^qt_{a'})   and
//   q^{n(a')} t^{n(a)} H^{1/q,1/t}_a = omega^c(H^qt_a),
// verified exactly.
bool check_relations(const Composition& a);

// Coefficient-wise substitution of the parameters in H^qt_a.
NSymElement specialize_H_qt(const Composition& a, const Subst& q_to, const Subst& t_to);

// H^{q(i)}_{(m)} = sum_{b |= m} q^{(l(b)-1) i + n(rev b)} s_b, the factors of
// the t = 1 product formula.
NSymElement H_qi_single(int m, int i);

// The factor list H^{q(sum_{j>1} a_j)}_{(a_1)} ... H^{q(0)}_{(a_k)}; the
// product equals H^qt_a at t = 1.
std::vector<NSymElement> H_q1_factorization(const Composition& a);

// Closed formulas of the bold-P theorem (n = |a|):
//   r_a = prod_{i in D(a^c)} 1/(1-q^{n-i} t^i)
//   c_{ab} = prod_{i in D(a^c) cap D(b)} q^{n-i}/(1-q^{n-i} t^i)
//   a_a = prod_{i in D(a)} (1-q^{n-i} t^i) / prod_{i in D(a^c)} (1-q^{n-i} t^i)
FactoredScalar r_alpha(const Composition& a);
FactoredScalar c_alpha_beta(const Composition& a, const Composition& b);
FactoredScalar a_alpha(const Composition& a);

// P^qt_a = r_a H^qt_a, with factored coefficients.
NSymElementF boldP(const Composition& a);

struct BoldPCoefficients {
    int n = 0;
    std::map<Composition, FactoredScalar> r;
    std::map<std::pair<Composition, Composition>, FactoredScalar> c;
    std::map<Composition, FactoredScalar> a;
    bool ok = true;        // all three defining conditions hold
    std::string witness;   // first failure, when not ok
};

// Tabulates the closed formulas for every index of degree n and checks the
// theorem's three conditions: triangularity over H^t, the omega' symmetry,
// and orthogonality of complementary pairs.
BoldPCoefficients boldP_coefficients(int n);

// The proof's inductive computation of the c coefficients, carried out with
// exact rational arithmetic.  Returns the same table as the closed formula
// (compared in tests and the acceptance suite).
struct BoldPRecursion {
    bool ok = true;
    std::string witness;
    std::map<std::pair<Composition, Composition>, QTScalar> c_num;  // c = c_num/c_den
    std::map<std::pair<Composition, Composition>, QTScalar> c_den;
};
BoldPRecursion boldP_recursion(int n);

// (1-q^b t^a) H^qt_{(1^a)} H^qt_{(b)} = (1-q^b) H^qt_{(1^a,b)}
//                                     + (1-t^a) H^qt_{(1^{a-1},b+1)}
bool hook_recurrence_check(int a, int b);

// Expands a formal H^qt/Htilde/Htq combination into the s basis.
NSymElement expand_Hqt_family(const NSymElement& x);

}  // namespace ncsf
