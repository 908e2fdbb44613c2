#include "ncsf/operators.hpp"

#include <stdexcept>

namespace ncsf {

NSymElement NSymOperator::apply(const NSymElement& x) const {
    NSymElement xs = convert(x, NSymBasis::s);
    bool started = false;
    NSymElement out;
    for (const auto& [a, c] : xs.terms()) {
        NSymElement image = c * rule_(a);
        if (image.is_zero()) continue;
        if (!started) {
            out = NSymElement(image.degree(), NSymBasis::s);
            started = true;
        }
        if (image.degree() != out.degree()) {
            throw std::logic_error("operator image is not homogeneous");
        }
        out += image;
    }
    if (!started) return NSymElement(x.degree(), NSymBasis::s);
    return out;
}

NSymOperator NSymOperator::identity() {
    return NSymOperator([](const Composition& a) { return NSymElement::unit(NSymBasis::s, a); }, "id");
}

NSymOperator NSymOperator::unit_counit() {
    return NSymOperator(
        [](const Composition& a) {
            NSymElement out(0, NSymBasis::s);
            if (a.empty()) out.add_term(a, QTScalar::one());
            // a nonempty: epsilon kills it, but the image must stay in degree 0
            return out;
        },
        "unit*counit");
}

NSymOperator NSymOperator::r_q() {
    return NSymOperator(
        [](const Composition& a) {
            NSymElement out(a.size(), NSymBasis::s);
            out.add_term(a, QTScalar::q(a.size()));
            return out;
        },
        "R^q");
}

NSymOperator NSymOperator::antipode_op() {
    return NSymOperator(
        [](const Composition& a) { return antipode(NSymElement::unit(NSymBasis::s, a)); }, "S");
}

NSymOperator NSymOperator::concat_op(const Composition& a) {
    return NSymOperator(
        [a](const Composition& b) { return NSymElement::unit(NSymBasis::s, b.concat(a)); },
        "A" + a.str());
}

NSymOperator NSymOperator::attach_op(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("attach operator requires a nonempty index");
    return NSymOperator(
        [a](const Composition& b) {
            if (b.empty()) throw std::invalid_argument("attach operator is undefined on the empty index");
            return NSymElement::unit(NSymBasis::s, b.attach(a));
        },
        "B" + a.str());
}

NSymOperator compose(const NSymOperator& v, const NSymOperator& w) {
    return NSymOperator(
        [v, w](const Composition& a) {
            return v.apply(w.apply_s(a));
        },
        v.name() + " " + w.name());
}

NSymOperator convolve(const NSymOperator& v, const NSymOperator& w) {
    return NSymOperator(
        [v, w](const Composition& a) {
            NSymTensor delta = tensor_convert(coproduct(NSymElement::unit(NSymBasis::s, a)), NSymBasis::s);
            bool started = false;
            NSymElement out;
            for (const auto& [key, c] : delta.terms()) {
                NSymElement piece =
                    c * multiply(v.apply_s(key.first), w.apply_s(key.second));
                if (piece.is_zero()) continue;
                if (!started) {
                    out = NSymElement(piece.degree(), NSymBasis::s);
                    started = true;
                }
                out += piece;
            }
            if (!started) return NSymElement(a.size(), NSymBasis::s);
            return out;
        },
        "(" + v.name() + " * " + w.name() + ")");
}

NSymOperator bar(const NSymOperator& v) {
    return convolve(NSymOperator::identity(), compose(v, NSymOperator::antipode_op()));
}

NSymOperator q_twist(const NSymOperator& v) {
    return bar(compose(bar(v), bar(NSymOperator::r_q())));
}

std::vector<std::vector<QTScalar>> transition_matrix(
    const std::function<NSymElement(const Composition&)>& family, int n) {
    auto comps = all_compositions(n);
    std::vector<std::vector<QTScalar>> m(comps.size(), std::vector<QTScalar>(comps.size()));
    for (size_t r = 0; r < comps.size(); ++r) {
        NSymElement row = convert(family(comps[r]), NSymBasis::s);
        for (size_t c = 0; c < comps.size(); ++c) m[r][c] = row.coeff(comps[c]);
    }
    return m;
}

}  // namespace ncsf
