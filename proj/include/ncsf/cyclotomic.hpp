#pragma once

#include "ncsf/qt_scalar.hpp"

#include <string>
#include <vector>

namespace ncsf {

// Dense integer polynomial in q, coefficient of q^i at index i.
using DensePoly = std::vector<BigInt>;

// The r-th cyclotomic polynomial, computed by exact division of q^r - 1 by
// the cyclotomic polynomials of the proper divisors of r.
DensePoly cyclotomic_polynomial(int r);

// Residue class of an integer polynomial in q modulo the r-th cyclotomic
// polynomial.  The class is zero exactly when the polynomial vanishes at
// every primitive r-th root of unity, which turns root-of-unity identities
// into exact integer computations.
class CyclotomicScalar {
public:
    // x must involve only q with nonnegative exponents; 2 <= r <= 12.
    static CyclotomicScalar reduce(const QTScalar& x, int r);

    int order() const { return r_; }
    const DensePoly& residue() const { return residue_; }
    bool is_zero() const { return residue_.empty(); }
    std::string str() const;

private:
    CyclotomicScalar(int r, DensePoly residue) : r_(r), residue_(std::move(residue)) {}
    int r_ = 2;
    DensePoly residue_;  // degree < deg Phi_r, no trailing zeros
};

}  // namespace ncsf
