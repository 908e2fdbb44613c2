#include "ncsf/cyclotomic.hpp"

#include <stdexcept>

namespace ncsf {

namespace {

void trim(DensePoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor (asserts zero remainder).
DensePoly div_monic(DensePoly num, const DensePoly& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("divisor must be monic");
    trim(num);
    DensePoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, 0);
    while (num.size() >= den.size()) {
        BigInt lead = num.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::logic_error("division was not exact");
    return quot;
}

DensePoly mod_monic(DensePoly num, const DensePoly& den) {
    trim(num);
    while (num.size() >= den.size()) {
        BigInt lead = num.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        trim(num);
    }
    return num;
}

}  // namespace

DensePoly cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // Phi_r = (q^r - 1) / prod_{d | r, d < r} Phi_d
    DensePoly num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d == 0) num = div_monic(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CyclotomicScalar CyclotomicScalar::reduce(const QTScalar& x, int r) {
    if (r < 2 || r > 12) throw std::invalid_argument("cyclotomic reduction supports 2 <= r <= 12");
    if (x.depends_on_t()) throw std::invalid_argument("cyclotomic reduction requires a polynomial in q only");
    if (!x.is_zero() && x.min_q_exp() < 0) {
        throw std::invalid_argument("cyclotomic reduction requires nonnegative q exponents");
    }
    DensePoly dense(x.is_zero() ? 0 : x.max_q_exp() + 1, 0);
    for (const auto& [m, c] : x.terms()) dense[m.q] = c;
    return CyclotomicScalar(r, mod_monic(std::move(dense), cyclotomic_polynomial(r)));
}

std::string CyclotomicScalar::str() const {
    QTScalar as_poly;
    for (size_t i = 0; i < residue_.size(); ++i) {
        if (residue_[i] != 0) as_poly.add_term({static_cast<int>(i), 0}, residue_[i]);
    }
    return as_poly.str() + " (mod Phi_" + std::to_string(r_) + ")";
}

}  // namespace ncsf
