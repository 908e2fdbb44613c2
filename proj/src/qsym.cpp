#include "ncsf/qsym.hpp"

#include "ncsf/hall_littlewood.hpp"

#include <stdexcept>

namespace ncsf {

namespace {

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

QSymElement convert(const QSymElement& x, QSymBasis target) {
    if (x.basis() == target) return x;
    QSymElement out(x.degree(), target);
    for (const auto& [a, c] : x.terms()) {
        if (target == QSymBasis::M) {
            // F_a = sum_{b <= a} M_b
            for (const auto& b : refinements(a)) out.add_term(b, c);
        } else {
            // M_a = sum_{b <= a} (-1)^{l(b)-l(a)} F_b
            for (const auto& b : refinements(a)) {
                out.add_term(b, QTScalar(sign_pow(b.length() - a.length())) * c);
            }
        }
    }
    return out;
}

QTScalar pair(const QSymElement& A, const NSymElement& B) {
    if (A.degree() != B.degree()) throw std::invalid_argument("pairing degree mismatch");
    QSymElement af = convert(A, QSymBasis::F);
    NSymElement bs = convert(B, NSymBasis::s);
    QTScalar out;
    for (const auto& [k, c] : af.terms()) out += c * bs.coeff(k);
    return out;
}

FactoredScalar pair(const QSymElementF& A, const NSymElement& B) {
    if (A.degree() != B.degree()) throw std::invalid_argument("pairing degree mismatch");
    if (A.basis() != QSymBasis::F) throw std::invalid_argument("factored pairing requires the F basis");
    NSymElement bs = convert(B, NSymBasis::s);
    FactoredScalar out;
    for (const auto& [k, c] : A.terms()) out += c * FactoredScalar(bs.coeff(k));
    return out;
}

DualFamily dual_of(const std::function<NSymElement(const Composition&)>& family, int n) {
    DualFamily result;
    auto comps = all_compositions(n);
    std::vector<NSymElement> members;
    members.reserve(comps.size());
    for (const auto& a : comps) members.push_back(convert(family(a), NSymBasis::s));
    // the common diagonal scale, read off the first pair
    result.diagonal = QTScalar(sign_pow(n + comps[0].length())) *
                      scalar_product(members[0], members[comps[0].complement().phi_index()]);
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = 0; j < comps.size(); ++j) {
            QTScalar got = scalar_product(members[i], members[j]);
            QTScalar expected;
            if (comps[j].complement() == comps[i]) {
                expected = QTScalar(sign_pow(n + comps[i].length())) * result.diagonal;
            }
            if (!(got == expected)) {
                result.orthogonal = false;
                result.witness = "<A" + comps[i].str() + ", A" + comps[j].str() + "> = " + got.str() +
                                 ", expected " + expected.str();
                return result;
            }
        }
    }
    auto inverse_scale = FactoredScalar(result.diagonal).reciprocal();
    if (!inverse_scale) {
        result.orthogonal = false;
        result.witness = "diagonal scale " + result.diagonal.str() + " is not invertible";
        return result;
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        const Composition& a = comps[i];
        const NSymElement& ac = members[a.complement().phi_index()];
        QSymElementF dual(n, QSymBasis::F);
        FactoredScalar scale = FactoredScalar(QTScalar(sign_pow(n + a.complement().length()))) *
                               *inverse_scale;
        for (const auto& b : comps) {
            dual.add_term(b, scale * FactoredScalar(scalar_product(
                                         ac, NSymElement::unit(NSymBasis::s, b))));
        }
        result.dual.emplace(a, std::move(dual));
    }
    return result;
}

QSymElement P_q(const Composition& a) {
    QSymElement out(a.size(), QSymBasis::F);
    Composition ac = a.complement();
    for (const auto& b : refinements(a)) {
        out.add_term(b, QTScalar(sign_pow(b.length() - a.length())) * QTScalar::q(c_stat(ac, b)));
    }
    return out;
}

QSymElementF P_qt(const Composition& a) {
    int n = a.size();
    FactoredScalar pre = FactoredScalar::one();
    for (int i = 1; i <= n - 1; ++i) pre *= FactoredScalar::inverse_factor(i, n - i);
    QSymElementF out(n, QSymBasis::F);
    Composition ac = a.complement();
    Composition ar = a.reversed();
    for (const auto& b : all_compositions(n)) {
        QTScalar w = QTScalar(sign_pow(b.length() - a.length())) *
                     QTScalar::t(c_stat(ac, b)) * QTScalar::q(c_stat(ar, b.conjugate()));
        out.add_term(b, pre * FactoredScalar(w));
    }
    return out;
}

QSymElement G_q_hivert(const Composition& a) {
    QSymElement out(a.size(), QSymBasis::F);
    for (const auto& b : refinements(a)) {
        out.add_term(b, QTScalar(sign_pow(b.length() - a.length())) *
                            QTScalar::q(bre(b, a).reversed().n_stat()));
    }
    return out;
}

}  // namespace ncsf
