#include "ncsf/qt_scalar.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ncsf {

Subst Subst::parse(const std::string& text) {
    if (text == "q") return q();
    if (text == "t") return t();
    if (text == "1/q") return inv_q();
    if (text == "1/t") return inv_t();
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size()) return integer(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad substitution '" + text + "' (expected q, t, 1/q, 1/t or an integer)");
}

QTScalar QTScalar::monomial(BigInt coeff, int qe, int te) {
    QTScalar x;
    if (coeff != 0) x.terms_[{qe, te}] = std::move(coeff);
    return x;
}

bool QTScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} && terms_.begin()->second == 1;
}

bool QTScalar::is_monomial(bool allow_zero) const {
    if (terms_.empty()) return allow_zero;
    return terms_.size() == 1;
}

BigInt QTScalar::coeff(int qe, int te) const {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int QTScalar::min_q_exp() const {
    if (terms_.empty()) return 0;
    int m = std::numeric_limits<int>::max();
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.q);
    return m;
}

int QTScalar::max_q_exp() const {
    if (terms_.empty()) return 0;
    int m = std::numeric_limits<int>::min();
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.q);
    return m;
}

int QTScalar::min_t_exp() const {
    if (terms_.empty()) return 0;
    int m = std::numeric_limits<int>::max();
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.t);
    return m;
}

int QTScalar::max_t_exp() const {
    if (terms_.empty()) return 0;
    int m = std::numeric_limits<int>::min();
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.t);
    return m;
}

bool QTScalar::depends_on_t() const {
    for (const auto& [mono, c] : terms_) {
        if (mono.t != 0) return true;
    }
    return false;
}

bool QTScalar::depends_on_q() const {
    for (const auto& [mono, c] : terms_) {
        if (mono.q != 0) return true;
    }
    return false;
}

void QTScalar::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTScalar& QTScalar::operator+=(const QTScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QTScalar& QTScalar::operator-=(const QTScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QTScalar operator*(const QTScalar& a, const QTScalar& b) {
    QTScalar out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term({ma.q + mb.q, ma.t + mb.t}, ca * cb);
        }
    }
    return out;
}

QTScalar& QTScalar::operator*=(const QTScalar& o) {
    *this = *this * o;
    return *this;
}

QTScalar QTScalar::operator-() const {
    QTScalar out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

QTScalar QTScalar::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow requires a nonnegative exponent");
    QTScalar acc = one();
    QTScalar base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string out;
    if (m.q != 0) {
        out += "q";
        if (m.q != 1) out += "^" + std::to_string(m.q);
    }
    if (m.t != 0) {
        if (!out.empty()) out += "*";
        out += "t";
        if (m.t != 1) out += "^" + std::to_string(m.t);
    }
    return out;
}

}  // namespace

std::string QTScalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = monomial_str(m);
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

namespace {

// image^e for an image restricted to the substitution menu.
QTScalar subst_power(const Subst& s, int e) {
    switch (s.kind) {
        case Subst::Kind::VarQ: return QTScalar::q(e);
        case Subst::Kind::VarT: return QTScalar::t(e);
        case Subst::Kind::InvQ: return QTScalar::q(-e);
        case Subst::Kind::InvT: return QTScalar::t(-e);
        case Subst::Kind::Int: {
            BigInt v = s.value;
            if (e == 0) return QTScalar::one();
            if (e < 0) {
                if (v == 1) return QTScalar::one();
                if (v == -1) return QTScalar((-e) % 2 == 0 ? 1 : -1);
                throw std::domain_error("integer substitution with negative exponent");
            }
            BigInt acc = 1;
            for (int i = 0; i < e; ++i) acc *= v;
            return QTScalar(acc);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

QTScalar QTScalar::substitute(const Subst& q_to, const Subst& t_to) const {
    QTScalar out;
    for (const auto& [m, c] : terms_) {
        out += QTScalar(c) * subst_power(q_to, m.q) * subst_power(t_to, m.t);
    }
    return out;
}

std::optional<QTScalar> div_exact(const QTScalar& num, const QTScalar& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    if (num.is_zero()) return QTScalar();
    // Shift each operand into a plain polynomial with zero minimum exponents.
    // The lowest-exponent slice of a product never cancels, so the quotient of
    // the shifted operands is a plain polynomial whenever the Laurent quotient
    // exists; the monomial shift is restored afterwards.
    int nq = num.min_q_exp(), nt = num.min_t_exp();
    int dq = den.min_q_exp(), dt = den.min_t_exp();
    QTScalar rem = num * QTScalar::monomial(1, -nq, -nt);
    QTScalar d = den * QTScalar::monomial(1, -dq, -dt);
    // Leading-term elimination under the canonical (graded) order.
    const auto dlt = *d.terms().rbegin();
    QTScalar quot;
    while (!rem.is_zero()) {
        const auto rlt = *rem.terms().rbegin();
        int eq = rlt.first.q - dlt.first.q;
        int et = rlt.first.t - dlt.first.t;
        if (eq < 0 || et < 0) return std::nullopt;
        BigInt qc = rlt.second / dlt.second;
        if (qc * dlt.second != rlt.second) return std::nullopt;
        QTScalar piece = QTScalar::monomial(qc, eq, et);
        quot += piece;
        rem -= piece * d;
    }
    return quot * QTScalar::monomial(1, nq - dq, nt - dt);
}

}  // namespace ncsf
