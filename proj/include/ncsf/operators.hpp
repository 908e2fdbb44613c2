#pragma once

#include "ncsf/nsym.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ncsf {

// A graded linear map on NSym, given by its action on the ribbon basis.  The
// rule receives an s index and returns the image in the s basis; application
// extends linearly over any homogeneous element.
class NSymOperator {
public:
    using Rule = std::function<NSymElement(const Composition&)>;

    NSymOperator(Rule rule, std::string name) : rule_(std::move(rule)), name_(std::move(name)) {}

    NSymElement apply_s(const Composition& a) const { return rule_(a); }
    NSymElement apply(const NSymElement& x) const;
    const std::string& name() const { return name_; }

    static NSymOperator identity();
    // eta o epsilon: projection onto the degree-0 component.
    static NSymOperator unit_counit();
    // R^q scales a homogeneous element of degree d by q^d.
    static NSymOperator r_q();
    static NSymOperator antipode_op();
    // A_a: s_b -> s_{b.a} (concatenate).
    static NSymOperator concat_op(const Composition& a);
    // B_a: s_b -> s_{b|a} (attach); undefined on the empty index.
    static NSymOperator attach_op(const Composition& a);

private:
    Rule rule_;
    std::string name_;
};

// Operator composition, (V W)(x) = V(W(x)).
NSymOperator compose(const NSymOperator& v, const NSymOperator& w);

// Convolution V * W = mu o (V (x) W) o Delta.
NSymOperator convolve(const NSymOperator& v, const NSymOperator& w);

// bar(V) = id * (V o S); an involution since NSym is co-commutative.
NSymOperator bar(const NSymOperator& v);

// The Hopf q-twist of V: bar(bar(V) o bar(R^q)).
NSymOperator q_twist(const NSymOperator& v);

// Row phi(a), column phi(b) holds the coefficient of s_b in the image of the
// degree-n basis element s_a.  Rows follow the family layout of the
// appendices: the matrix of a basis family lists each member's s expansion.
std::vector<std::vector<QTScalar>> transition_matrix(
    const std::function<NSymElement(const Composition&)>& family, int n);

}  // namespace ncsf
