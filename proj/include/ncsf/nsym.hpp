#pragma once

#include "ncsf/elements.hpp"

namespace ncsf {

// Basis conversions between h, e and s.
//
//   s_a = sum_{b >= a} (-1)^{l(a)-l(b)} h_b        h_a = sum_{b >= a} s_b
//   e_a = sum_{b <= a} (-1)^{|a|-l(b)} h_b         (and the same form for h in e)
//
// Elements tagged with one of the extended families must be expanded through
// families.hpp first.
NSymElement convert(const NSymElement& x, NSymBasis target);

// Product of NSym.  In the h basis indices concatenate freely; in the s basis
//   s_b * s_a = s_{b.a} + s_{b|a}
// extended bilinearly (the attach term drops out against the empty index).
NSymElement multiply(const NSymElement& x, const NSymElement& y);

// Coproduct, the algebra morphism with Delta(h_k) = sum_i h_i (x) h_{k-i}.
// Returned in the h (x) h basis.
NSymTensor coproduct(const NSymElement& x);

// Re-expands both legs of a tensor in the target basis.
NSymTensor tensor_convert(const NSymTensor& x, NSymBasis target);

// S(s_a) = (-1)^{|a|} s_{a'}.
NSymElement antipode(const NSymElement& x);

// The three involutions, index maps on s and basis-exchanging maps on h/e.
NSymElement omega_prime(const NSymElement& x);
NSymElement omega_bar(const NSymElement& x);
NSymElement omega_c(const NSymElement& x);

// The semi-self-dual scalar product, <s_a, s_b> = (-1)^{|a|+l(a)} delta_{a,b^c},
// extended bilinearly.  Degrees must match; <1, 1> = 1 in degree 0.
QTScalar scalar_product(const NSymElement& x, const NSymElement& y);
// Same pairing for factored coefficients; both sides must be in the s basis.
FactoredScalar scalar_product(const NSymElementF& x, const NSymElementF& y);

// Recovers the s expansion of f through scalar products alone:
//   f = sum_a (-1)^{l(a)+1} <s_{a^c}, f> s_a.
NSymElement expand_by_scalar(const NSymElement& f);

// Counit: the coefficient of the empty composition (zero unless degree 0).
QTScalar counit(const NSymElement& x);

}  // namespace ncsf
