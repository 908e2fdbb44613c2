#include "ncsf/nabla.hpp"

#include <stdexcept>

namespace ncsf {

namespace {

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

// prod over the common descents of a and b of (t^i + q^{n-i})
QTScalar binomial_product(const Composition& a, const Composition& b) {
    int n = a.size();
    std::uint64_t common = a.descent_mask() & b.descent_mask();
    QTScalar out = QTScalar::one();
    for (int i = 1; i < n; ++i) {
        if (common & (std::uint64_t{1} << (i - 1))) {
            out *= QTScalar::t(i) + QTScalar::q(n - i);
        }
    }
    return out;
}

}  // namespace

NSymElement nabla_s(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("nabla_s requires a nonempty composition");
    int n = a.size();
    NSymElement out(n, NSymBasis::s);
    Composition ac = a.complement();
    QTScalar pre = QTScalar(sign_pow(n + a.length())) *
                   QTScalar::monomial(1, a.conjugate().n_stat(), ac.n_stat());
    for (const auto& b : refinements(ac)) {
        out.add_term(b, pre * binomial_product(a, b));
    }
    return out;
}

NSymElement nabla(const NSymElement& x) {
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement out(x.degree(), NSymBasis::s);
    if (x.degree() == 0) return xs;
    for (const auto& [a, c] : xs.terms()) out += c * nabla_s(a);
    return out;
}

NSymElement nabla_inverse(const NSymElement& x) {
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement out(x.degree(), NSymBasis::s);
    if (x.degree() == 0) return xs;
    for (const auto& [a, c] : xs.terms()) {
        Composition ac = a.complement();
        QTScalar sign(sign_pow(a.length() + 1));
        for (const auto& b : coarsenings(ac)) {
            QTScalar mono = QTScalar::monomial(1, -b.conjugate().n_stat(), -b.complement().n_stat());
            out.add_term(b, c * sign * mono * binomial_product(b.complement(), ac));
        }
    }
    return out;
}

KroneckerChain kron_chain(ChainKind kind, int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("kron_chain supports 2 <= n <= 12");
    KroneckerChain chain;
    chain.n = n;
    for (int i = 1; i <= n - 1; ++i) {
        QTScalar qp = QTScalar::q(n - i), tp = QTScalar::t(i);
        switch (kind) {
            case ChainKind::HtildeToS:
                chain.factors.push_back({QTScalar::one(), qp, QTScalar::one(), tp});
                break;
            case ChainKind::SToHtilde:
                chain.factors.push_back({tp, -qp, -QTScalar::one(), QTScalar::one()});
                break;
            case ChainKind::NablaOnHtilde:
                chain.factors.push_back({qp, QTScalar(), QTScalar(), tp});
                break;
            case ChainKind::NablaOnS:
                chain.factors.push_back({QTScalar(), -(qp * tp), QTScalar::one(), tp + qp});
                break;
        }
    }
    return chain;
}

std::vector<std::vector<QTScalar>> expand(const KroneckerChain& chain) {
    // Fold with the stated convention: acc (x) M has the entries of M choosing
    // the block, so factor i ends up controlling bit i-1 of the phi index.
    std::vector<std::vector<QTScalar>> acc{{QTScalar::one()}};
    for (const auto& m : chain.factors) {
        size_t dim = acc.size();
        std::vector<std::vector<QTScalar>> next(2 * dim, std::vector<QTScalar>(2 * dim));
        for (size_t r = 0; r < 2 * dim; ++r) {
            for (size_t s = 0; s < 2 * dim; ++s) {
                const QTScalar& block = m[(r / dim) * 2 + (s / dim)];
                next[r][s] = block * acc[r % dim][s % dim];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool check_nabla_scalar_law(const NSymElement& f, const NSymElement& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    int n = f.degree();
    int choose2 = n * (n - 1) / 2;
    QTScalar lhs = scalar_product(nabla(f), nabla(g));
    QTScalar rhs = QTScalar::monomial(1, choose2, choose2) * scalar_product(f, g);
    return lhs == rhs;
}

NSymElement nabla_e_t1(int n) {
    if (n < 1) throw std::invalid_argument("nabla_e_t1 requires n >= 1");
    NSymElement col = NSymElement::unit(NSymBasis::s, Composition(std::vector<int>(n, 1)));
    NSymElement image = substitute_coeffs(nabla(col), Subst::q(), Subst::integer(1));
    NSymElement in_e = convert(image, NSymBasis::e);
    NSymElement expected(n, NSymBasis::e);
    for (const auto& a : all_compositions(n)) {
        expected.add_term(a, QTScalar::q(a.conjugate().n_stat()));
    }
    if (!(in_e == expected)) throw std::logic_error("nabla(e_n) at t=1 missed its closed form");
    return in_e;
}

}  // namespace ncsf
