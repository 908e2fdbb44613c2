#include "ncsf/nsym.hpp"

#include <stdexcept>

namespace ncsf {

std::string basis_name(NSymBasis b) {
    switch (b) {
        case NSymBasis::h: return "h";
        case NSymBasis::e: return "e";
        case NSymBasis::s: return "s";
        case NSymBasis::Hq: return "Hq";
        case NSymBasis::Htq: return "Htq";
        case NSymBasis::Hqt: return "Hqt";
        case NSymBasis::Htilde: return "Htilde";
    }
    throw std::logic_error("unreachable");
}

std::string basis_name(QSymBasis b) { return b == QSymBasis::M ? "M" : "F"; }

NSymTensor& NSymTensor::operator+=(const NSymTensor& o) {
    if (degree_ != o.degree_ || basis_ != o.basis_) throw std::invalid_argument("tensor mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

std::string NSymTensor::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    std::string name = basis_name(basis_);
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        std::string cs = c.str();
        if (cs != "1") out += (cs.find(' ') == std::string::npos ? cs : "(" + cs + ")") + "*";
        out += name + k.first.str() + "(x)" + name + k.second.str();
        first = false;
    }
    return out;
}

namespace {

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

NSymElement convert_h_to_s(const NSymElement& x) {
    NSymElement out(x.degree(), NSymBasis::s);
    for (const auto& [a, c] : x.terms()) {
        for (const auto& b : coarsenings(a)) out.add_term(b, c);
    }
    return out;
}

NSymElement convert_s_to_h(const NSymElement& x) {
    NSymElement out(x.degree(), NSymBasis::h);
    for (const auto& [a, c] : x.terms()) {
        for (const auto& b : coarsenings(a)) {
            out.add_term(b, QTScalar(sign_pow(a.length() - b.length())) * c);
        }
    }
    return out;
}

// The h <-> e exchange has the same coefficients in both directions:
// x_a = sum_{b <= a} (-1)^{|a| - l(b)} y_b.
NSymElement convert_he_exchange(const NSymElement& x, NSymBasis target) {
    NSymElement out(x.degree(), target);
    for (const auto& [a, c] : x.terms()) {
        for (const auto& b : refinements(a)) {
            out.add_term(b, QTScalar(sign_pow(a.size() - b.length())) * c);
        }
    }
    return out;
}

}  // namespace

NSymElement convert(const NSymElement& x, NSymBasis target) {
    NSymBasis src = x.basis();
    if (src != NSymBasis::h && src != NSymBasis::e && src != NSymBasis::s) {
        throw std::invalid_argument("convert: expand family-tagged elements through families.hpp first");
    }
    if (target != NSymBasis::h && target != NSymBasis::e && target != NSymBasis::s) {
        throw std::invalid_argument("convert: target must be h, e or s");
    }
    if (src == target) return x;
    switch (src) {
        case NSymBasis::h:
            if (target == NSymBasis::s) return convert_h_to_s(x);
            return convert_he_exchange(x, NSymBasis::e);
        case NSymBasis::e:
            if (target == NSymBasis::h) return convert_he_exchange(x, NSymBasis::h);
            return convert_h_to_s(convert_he_exchange(x, NSymBasis::h));
        case NSymBasis::s:
            if (target == NSymBasis::h) return convert_s_to_h(x);
            return convert_he_exchange(convert_s_to_h(x), NSymBasis::e);
        default: throw std::logic_error("unreachable");
    }
}

NSymElement multiply(const NSymElement& x, const NSymElement& y) {
    if (x.basis() == NSymBasis::h && y.basis() == NSymBasis::h) {
        NSymElement out(x.degree() + y.degree(), NSymBasis::h);
        for (const auto& [a, ca] : x.terms()) {
            for (const auto& [b, cb] : y.terms()) out.add_term(a.concat(b), ca * cb);
        }
        return out;
    }
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement ys = convert(y, NSymBasis::s);
    NSymElement out(x.degree() + y.degree(), NSymBasis::s);
    for (const auto& [b, cb] : xs.terms()) {
        for (const auto& [a, ca] : ys.terms()) {
            QTScalar c = cb * ca;
            if (b.empty() || a.empty()) {
                out.add_term(b.concat(a), c);
            } else {
                out.add_term(b.concat(a), c);
                out.add_term(b.attach(a), c);
            }
        }
    }
    return out;
}

NSymTensor coproduct(const NSymElement& x) {
    NSymElement xh = convert(x, NSymBasis::h);
    NSymTensor out(x.degree(), NSymBasis::h);
    for (const auto& [a, c] : xh.terms()) {
        // Product over the parts of Delta(h_k) = sum_i h_i (x) h_{k-i}.
        std::map<NSymTensor::Key, QTScalar> acc;
        acc[{Composition(), Composition()}] = c;
        for (int part : a.parts()) {
            std::map<NSymTensor::Key, QTScalar> next;
            for (const auto& [key, v] : acc) {
                for (int i = 0; i <= part; ++i) {
                    Composition left = i == 0 ? key.first : key.first.concat(Composition({i}));
                    Composition right =
                        i == part ? key.second : key.second.concat(Composition({part - i}));
                    auto& slot = next[{left, right}];
                    slot += v;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [key, v] : acc) out.add_term(key.first, key.second, v);
    }
    return out;
}

NSymTensor tensor_convert(const NSymTensor& x, NSymBasis target) {
    NSymTensor out(x.degree(), target);
    for (const auto& [key, c] : x.terms()) {
        NSymElement left = convert(NSymElement::unit(x.basis(), key.first), target);
        NSymElement right = convert(NSymElement::unit(x.basis(), key.second), target);
        for (const auto& [kl, cl] : left.terms()) {
            for (const auto& [kr, cr] : right.terms()) out.add_term(kl, kr, c * cl * cr);
        }
    }
    return out;
}

NSymElement antipode(const NSymElement& x) {
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement out(x.degree(), NSymBasis::s);
    QTScalar sign(sign_pow(x.degree()));
    for (const auto& [a, c] : xs.terms()) out.add_term(a.conjugate(), sign * c);
    return out;
}

namespace {

enum class Omega { Prime, Bar, Complement };

NSymElement apply_omega(const NSymElement& x, Omega which) {
    NSymBasis b = x.basis();
    if (b == NSymBasis::s) {
        NSymElement out(x.degree(), NSymBasis::s);
        for (const auto& [a, c] : x.terms()) {
            switch (which) {
                case Omega::Prime: out.add_term(a.conjugate(), c); break;
                case Omega::Bar: out.add_term(a.reversed(), c); break;
                case Omega::Complement: out.add_term(a.complement(), c); break;
            }
        }
        return out;
    }
    if (b == NSymBasis::h || b == NSymBasis::e) {
        NSymBasis other = b == NSymBasis::h ? NSymBasis::e : NSymBasis::h;
        NSymBasis target = which == Omega::Bar ? b : other;
        NSymElement out(x.degree(), target);
        for (const auto& [a, c] : x.terms()) {
            out.add_term(which == Omega::Complement ? a : a.reversed(), c);
        }
        return out;
    }
    return apply_omega(convert(x, NSymBasis::s), which);
}

}  // namespace

NSymElement omega_prime(const NSymElement& x) { return apply_omega(x, Omega::Prime); }
NSymElement omega_bar(const NSymElement& x) { return apply_omega(x, Omega::Bar); }
NSymElement omega_c(const NSymElement& x) { return apply_omega(x, Omega::Complement); }

QTScalar scalar_product(const NSymElement& x, const NSymElement& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("scalar product degree mismatch");
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement ys = convert(y, NSymBasis::s);
    QTScalar out;
    for (const auto& [a, c] : xs.terms()) {
        QTScalar other = ys.coeff(a.complement());
        if (other.is_zero()) continue;
        out += QTScalar(sign_pow(a.size() + a.length())) * c * other;
    }
    return out;
}

FactoredScalar scalar_product(const NSymElementF& x, const NSymElementF& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("scalar product degree mismatch");
    if (x.basis() != NSymBasis::s || y.basis() != NSymBasis::s) {
        throw std::invalid_argument("factored scalar product requires the s basis");
    }
    FactoredScalar out;
    for (const auto& [a, c] : x.terms()) {
        FactoredScalar other = y.coeff(a.complement());
        if (other.is_zero()) continue;
        out += FactoredScalar(QTScalar(sign_pow(a.size() + a.length()))) * c * other;
    }
    return out;
}

NSymElement expand_by_scalar(const NSymElement& f) {
    NSymElement out(f.degree(), NSymBasis::s);
    for (const auto& a : all_compositions(f.degree())) {
        NSymElement probe = NSymElement::unit(NSymBasis::s, a.complement());
        QTScalar c = QTScalar(sign_pow(a.length() + 1)) * scalar_product(probe, f);
        out.add_term(a, c);
    }
    return out;
}

QTScalar counit(const NSymElement& x) {
    if (x.degree() != 0) return QTScalar();
    return x.coeff(Composition());
}

}  // namespace ncsf
