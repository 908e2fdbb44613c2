#include "ncsf/macdonald.hpp"

#include "ncsf/hall_littlewood.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncsf {

namespace {

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

NSymElement H_qt(const Composition& a) {
    NSymElement out(a.size(), NSymBasis::s);
    Composition conj = a.conjugate();
    for (const auto& b : all_compositions(a.size())) {
        out.add_term(b, QTScalar::monomial(1, c_stat(conj, b.reversed()), c_stat(a, b.complement())));
    }
    return out;
}

NSymElement H_tilde_qt(const Composition& a) {
    NSymElement out(a.size(), NSymBasis::s);
    Composition conj = a.conjugate();
    for (const auto& b : all_compositions(a.size())) {
        out.add_term(b, QTScalar::monomial(1, c_stat(conj, b.reversed()), c_stat(a, b)));
    }
    return out;
}

NSymElement H_tq(const Composition& a) { return swap_qt_coeffs(H_qt(a)); }

bool check_relations(const Composition& a) {
    if (!(H_tq(a) == omega_prime(H_qt(a.conjugate())))) return false;
    QTScalar pre = QTScalar::monomial(1, a.conjugate().n_stat(), a.n_stat());
    NSymElement lhs = pre * substitute_coeffs(H_qt(a), Subst::inv_q(), Subst::inv_t());
    return lhs == omega_c(H_qt(a));
}

NSymElement specialize_H_qt(const Composition& a, const Subst& q_to, const Subst& t_to) {
    return substitute_coeffs(H_qt(a), q_to, t_to);
}

NSymElement H_qi_single(int m, int i) {
    if (m < 1 || i < 0) throw std::invalid_argument("H_qi_single requires m >= 1, i >= 0");
    NSymElement out(m, NSymBasis::s);
    for (const auto& b : all_compositions(m)) {
        out.add_term(b, QTScalar::q((b.length() - 1) * i + b.reversed().n_stat()));
    }
    return out;
}

std::vector<NSymElement> H_q1_factorization(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("H_q1_factorization requires a nonempty composition");
    std::vector<NSymElement> factors;
    int remaining = a.size();
    for (int part : a.parts()) {
        remaining -= part;
        factors.push_back(H_qi_single(part, remaining));
    }
    return factors;
}

FactoredScalar r_alpha(const Composition& a) {
    int n = a.size();
    FactoredScalar out = FactoredScalar::one();
    for (int i : a.complement().descents()) out *= FactoredScalar::inverse_factor(n - i, i);
    return out;
}

FactoredScalar c_alpha_beta(const Composition& a, const Composition& b) {
    int n = a.size();
    if (b.size() != n) throw std::invalid_argument("c_alpha_beta requires equal sizes");
    std::uint64_t common = a.complement().descent_mask() & b.descent_mask();
    FactoredScalar out = FactoredScalar::one();
    for (int i = 1; i < n; ++i) {
        if (common & (std::uint64_t{1} << (i - 1))) {
            out *= FactoredScalar(QTScalar::q(n - i)) * FactoredScalar::inverse_factor(n - i, i);
        }
    }
    return out;
}

FactoredScalar a_alpha(const Composition& a) {
    int n = a.size();
    FactoredScalar out = FactoredScalar::one();
    for (int i : a.descents()) out *= FactoredScalar(expand_factors({{{n - i, i}, 1}}));
    for (int i : a.complement().descents()) out *= FactoredScalar::inverse_factor(n - i, i);
    return out;
}

NSymElementF boldP(const Composition& a) { return r_alpha(a) * to_factored(H_qt(a)); }

namespace {

NSymElementF omega_prime_factored(const NSymElementF& x) {
    NSymElementF out(x.degree(), x.basis());
    for (const auto& [k, c] : x.terms()) out.add_term(k.conjugate(), c);
    return out;
}

}  // namespace

BoldPCoefficients boldP_coefficients(int n) {
    BoldPCoefficients table;
    table.n = n;
    auto comps = all_compositions(n);
    for (const auto& a : comps) {
        table.r.emplace(a, r_alpha(a));
        table.a.emplace(a, a_alpha(a));
        for (const auto& b : refinements(a)) table.c.emplace(std::make_pair(a, b), c_alpha_beta(a, b));
    }
    std::map<Composition, NSymElementF> P;
    for (const auto& a : comps) P.emplace(a, boldP(a));

    // condition 1: P^qt_a = H^t_a + sum_{b < a} c_ab H^t_b, with c_aa = 1
    for (const auto& a : comps) {
        NSymElementF rhs(n, NSymBasis::s);
        for (const auto& b : refinements(a)) {
            FactoredScalar cab = table.c.at({a, b});
            if (b == a && !cab.is_one()) {
                table.ok = false;
                table.witness = "c" + a.str() + a.str() + " is not 1";
                return table;
            }
            NSymElement ht = H_t(b);
            for (const auto& [k, hc] : ht.terms()) rhs.add_term(k, cab * FactoredScalar(hc));
        }
        if (!(rhs == P.at(a))) {
            table.ok = false;
            table.witness = "triangular expansion fails at " + a.str();
            return table;
        }
    }
    // condition 2: omega' P^qt_a = a_a P^tq_{a'}
    for (const auto& a : comps) {
        NSymElementF lhs = omega_prime_factored(P.at(a));
        NSymElementF rhs(n, NSymBasis::s);
        NSymElementF swapped = swap_qt_coeffs(P.at(a.conjugate()));
        FactoredScalar aa = table.a.at(a);
        for (const auto& [k, c] : swapped.terms()) rhs.add_term(k, aa * c);
        if (!(lhs == rhs)) {
            table.ok = false;
            table.witness = "omega' symmetry fails at " + a.str();
            return table;
        }
    }
    // condition 3: <P^qt_a, P^qt_b> = 0 unless a = b^c
    for (const auto& a : comps) {
        for (const auto& b : comps) {
            if (b.complement() == a) continue;
            if (!scalar_product(P.at(a), P.at(b)).is_zero()) {
                table.ok = false;
                table.witness = "<P" + a.str() + ", P" + b.str() + "> is nonzero";
                return table;
            }
        }
    }
    return table;
}

namespace {

// Plain exact fraction of Laurent polynomials; division is unconstrained, so
// the proof's recursion can run as written.  Kept light: normalization only
// divides out the denominator when it divides exactly.
struct Fraction {
    QTScalar num;
    QTScalar den = QTScalar::one();

    static Fraction of(QTScalar n) { return {std::move(n), QTScalar::one()}; }
    bool is_zero() const { return num.is_zero(); }
    Fraction swap_qt() const { return {num.swap_qt(), den.swap_qt()}; }

    Fraction operator*(const Fraction& o) const { return reduce({num * o.num, den * o.den}); }
    Fraction operator+(const Fraction& o) const {
        return reduce({num * o.den + o.num * den, den * o.den});
    }
    Fraction operator/(const Fraction& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero fraction");
        return reduce({num * o.den, den * o.num});
    }

    static Fraction reduce(Fraction f) {
        if (f.num.is_zero()) return {QTScalar(), QTScalar::one()};
        if (auto q = div_exact(f.num, f.den)) return {*q, QTScalar::one()};
        return f;
    }
};

}  // namespace

BoldPRecursion boldP_recursion(int n) {
    BoldPRecursion out;
    auto comps = all_compositions(n);
    std::sort(comps.begin(), comps.end(), [](const Composition& x, const Composition& y) {
        if (x.length() != y.length()) return x.length() > y.length();
        return x.phi_index() < y.phi_index();
    });

    std::map<std::pair<Composition, Composition>, Fraction> c;
    auto scalar_with = [n](const NSymElement& x, const std::map<Composition, Fraction>& y) {
        Fraction acc;
        for (const auto& [g, cg] : x.terms()) {
            auto it = y.find(g.complement());
            if (it == y.end()) continue;
            acc = acc + Fraction::of(QTScalar(sign_pow(n + g.length())) * cg) * it->second;
        }
        return acc;
    };

    for (const auto& alpha : comps) {
        c[{alpha, alpha}] = Fraction::of(QTScalar::one());
        // strictly finer betas, coarsest first so all theta > beta are known
        std::vector<Composition> betas = refinements(alpha);
        std::sort(betas.begin(), betas.end(), [](const Composition& x, const Composition& y) {
            if (x.length() != y.length()) return x.length() < y.length();
            return x.phi_index() < y.phi_index();
        });
        for (const auto& beta : betas) {
            if (beta == alpha) continue;
            Composition betar = beta.reversed();
            // X = omega' P^tq_{rev beta}, assembled from already-known rows
            std::map<Composition, Fraction> X;
            for (const auto& theta : refinements(betar)) {
                auto it = c.find({betar, theta});
                if (it == c.end()) {
                    out.ok = false;
                    out.witness = "row " + betar.str() + " not available before " + alpha.str();
                    return out;
                }
                Fraction co = it->second.swap_qt();
                NSymElement hq = H_q(theta);
                for (const auto& [k, hc] : hq.terms()) {
                    Composition key = k.conjugate();
                    auto slot = X.find(key);
                    Fraction add = co * Fraction::of(hc);
                    if (slot == X.end()) {
                        X.emplace(key, add);
                    } else {
                        slot->second = slot->second + add;
                    }
                }
            }
            Fraction a_sw = Fraction::of(QTScalar(sign_pow(n + beta.length()))) *
                            scalar_with(H_t(beta), X);
            if (a_sw.is_zero()) {
                out.ok = false;
                out.witness = "vanishing a coefficient at " + beta.str();
                return out;
            }
            Fraction sum;
            for (const auto& theta : coarsenings(beta)) {
                if (theta == beta || !theta.refines(alpha)) continue;
                sum = sum + c.at({alpha, theta}) * scalar_with(H_t(theta), X);
            }
            Fraction value =
                Fraction::of(QTScalar(sign_pow(n + 1 + beta.length()))) * sum / a_sw;
            c[{alpha, beta}] = value;
        }
    }
    for (const auto& [key, f] : c) {
        out.c_num.emplace(key, f.num);
        out.c_den.emplace(key, f.den);
    }
    return out;
}

bool hook_recurrence_check(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("hook recurrence requires a, b >= 1");
    QTScalar one = QTScalar::one();
    std::vector<int> ones(a, 1), hook(a, 1), shorter;
    hook.push_back(b);
    if (a >= 2) shorter.assign(a - 1, 1);
    shorter.push_back(b + 1);
    NSymElement lhs = (one - QTScalar::monomial(1, b, a)) *
                      multiply(H_qt(Composition(ones)), H_qt(Composition({b})));
    NSymElement rhs = (one - QTScalar::q(b)) * H_qt(Composition(hook)) +
                      (one - QTScalar::t(a)) * H_qt(Composition(shorter));
    return lhs == rhs;
}

NSymElement expand_Hqt_family(const NSymElement& x) {
    NSymElement (*builder)(const Composition&) = nullptr;
    switch (x.basis()) {
        case NSymBasis::Hqt: builder = &H_qt; break;
        case NSymBasis::Htq: builder = &H_tq; break;
        case NSymBasis::Htilde: builder = &H_tilde_qt; break;
        default: throw std::invalid_argument("expand_Hqt_family requires a q,t-family tag");
    }
    NSymElement out(x.degree(), NSymBasis::s);
    for (const auto& [a, cf] : x.terms()) out += cf * builder(a);
    return out;
}

}  // namespace ncsf
