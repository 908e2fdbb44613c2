#include "ncsf/factored_scalar.hpp"

#include <stdexcept>

namespace ncsf {

namespace {

QTScalar factor_poly(int a, int b) {
    QTScalar f = QTScalar::one();
    f -= QTScalar::monomial(1, a, b);
    return f;
}

}  // namespace

FactoredScalar::FactoredScalar(QTScalar num, DenMap den) : num_(std::move(num)), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) {
        const auto& [factor, mult] = *it;
        if (factor.first < 1 || factor.second < 0) {
            throw std::invalid_argument("denominator factor must be (1 - q^a t^b) with a >= 1, b >= 0");
        }
        if (mult < 0) throw std::invalid_argument("negative factor multiplicity");
        it = (mult == 0) ? den_.erase(it) : std::next(it);
    }
    if (num_.is_zero()) den_.clear();
}

FactoredScalar FactoredScalar::inverse_factor(int a, int b) {
    return FactoredScalar(QTScalar::one(), DenMap{{{a, b}, 1}});
}

QTScalar expand_factors(const FactoredScalar::DenMap& factors) {
    QTScalar out = QTScalar::one();
    for (const auto& [f, mult] : factors) out *= factor_poly(f.first, f.second).pow(mult);
    return out;
}

QTScalar FactoredScalar::den_expanded() const { return expand_factors(den_); }

FactoredScalar& FactoredScalar::operator+=(const FactoredScalar& o) {
    // Common denominator: factor-wise max multiplicity.
    DenMap common = den_;
    for (const auto& [f, mult] : o.den_) {
        auto& m = common[f];
        m = std::max(m, mult);
    }
    DenMap mine_missing, theirs_missing;
    for (const auto& [f, mult] : common) {
        auto mine = den_.find(f);
        int have = mine == den_.end() ? 0 : mine->second;
        if (mult > have) mine_missing[f] = mult - have;
        auto theirs = o.den_.find(f);
        have = theirs == o.den_.end() ? 0 : theirs->second;
        if (mult > have) theirs_missing[f] = mult - have;
    }
    num_ = num_ * expand_factors(mine_missing) + o.num_ * expand_factors(theirs_missing);
    den_ = std::move(common);
    if (num_.is_zero()) den_.clear();
    return *this;
}

FactoredScalar& FactoredScalar::operator-=(const FactoredScalar& o) {
    *this += -o;
    return *this;
}

FactoredScalar& FactoredScalar::operator*=(const FactoredScalar& o) {
    num_ *= o.num_;
    for (const auto& [f, mult] : o.den_) den_[f] += mult;
    if (num_.is_zero()) den_.clear();
    return *this;
}

bool operator==(const FactoredScalar& a, const FactoredScalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

FactoredScalar FactoredScalar::cancelled() const {
    QTScalar num = num_;
    DenMap den;
    for (const auto& [f, mult] : den_) {
        QTScalar fp = factor_poly(f.first, f.second);
        int remaining = mult;
        while (remaining > 0) {
            auto q = div_exact(num, fp);
            if (!q) break;
            num = *q;
            --remaining;
        }
        if (remaining > 0) den[f] = remaining;
    }
    return FactoredScalar(std::move(num), std::move(den));
}

std::optional<FactoredScalar> FactoredScalar::reciprocal() const {
    if (is_zero()) return std::nullopt;
    FactoredScalar red = cancelled();
    // Pull out the monomial content, then peel factor forms by trial division.
    int sq = red.num_.min_q_exp();
    int st = red.num_.min_t_exp();
    QTScalar core = red.num_ * QTScalar::monomial(1, -sq, -st);
    DenMap found;
    bool progress = true;
    while (!core.is_monomial(false) && progress) {
        progress = false;
        for (const auto& [m, c] : core.terms()) {
            if (m == Monomial{0, 0}) continue;
            if (m.q < 1 || m.t < 0) continue;
            Monomial cand = m;
            auto q = div_exact(core, factor_poly(cand.q, cand.t));
            if (q) {
                core = *q;  // invalidates the loop; restart via the outer while
                found[{cand.q, cand.t}] += 1;
                progress = true;
                break;
            }
        }
    }
    if (!core.is_monomial(false)) return std::nullopt;
    const auto& [mono, c] = *core.terms().begin();
    if (c != 1 && c != -1) return std::nullopt;
    // red = c * q^(sq+mono.q) t^(st+mono.t) * prod(found) / prod(red.den),
    // so 1/red = c * q^-(..) t^-(..) * prod(red.den) / prod(found).
    QTScalar num = QTScalar::monomial(c, -(sq + mono.q), -(st + mono.t)) * expand_factors(red.den_);
    return FactoredScalar(std::move(num), std::move(found));
}

FactoredScalar FactoredScalar::swap_qt() const {
    DenMap den;
    for (const auto& [f, mult] : den_) {
        // (1 - q^a) would swap to (1 - t^a), outside the allowed factor shape.
        // The q,t-symmetric objects in this theory only carry factors with
        // both exponents positive, so this is never hit by them.
        if (f.second < 1) throw std::domain_error("cannot swap a denominator factor with t-exponent 0");
        den[{f.second, f.first}] += mult;
    }
    return FactoredScalar(num_.swap_qt(), std::move(den));
}

std::string FactoredScalar::str() const {
    if (den_.empty()) return num_.str();
    std::string out = "(" + num_.str() + ")/(";
    bool first = true;
    for (const auto& [f, mult] : den_) {
        if (!first) out += "*";
        out += "(1-";
        out += QTScalar::monomial(1, f.first, f.second).str();
        out += ")";
        if (mult != 1) out += "^" + std::to_string(mult);
        first = false;
    }
    out += ")";
    return out;
}

}  // namespace ncsf
