#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ncsf {

using BigInt = boost::multiprecision::cpp_int;

// Exponent pair of a monomial q^a t^b (Laurent: exponents may be negative).
struct Monomial {
    int q = 0;
    int t = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical monomial order: by (total degree, q exponent, t exponent),
// ascending.  Storage and printing both use it, so text output is
// deterministic.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long ta = long{a.q} + a.t, tb = long{b.q} + b.t;
        if (ta != tb) return ta < tb;
        if (a.q != b.q) return a.q < b.q;
        return a.t < b.t;
    }
};

// A substitution target for one of the variables: another variable, its
// inverse, or an integer constant.
struct Subst {
    enum class Kind { VarQ, VarT, InvQ, InvT, Int };
    Kind kind = Kind::VarQ;
    long long value = 0;

    static Subst q() { return {Kind::VarQ, 0}; }
    static Subst t() { return {Kind::VarT, 0}; }
    static Subst inv_q() { return {Kind::InvQ, 0}; }
    static Subst inv_t() { return {Kind::InvT, 0}; }
    static Subst integer(long long v) { return {Kind::Int, v}; }
    // Accepts "q", "t", "1/q", "1/t" or a decimal integer.
    static Subst parse(const std::string& text);
};

// Exact Laurent polynomial in q and t with big-integer coefficients.  The
// coefficient ring for everything in this library; no stored zero terms, no
// floating point anywhere.
class QTScalar {
public:
    using TermMap = std::map<Monomial, BigInt, MonomialLess>;

    QTScalar() = default;
    QTScalar(long long v) { if (v != 0) terms_[{0, 0}] = v; }
    QTScalar(BigInt v) { if (v != 0) terms_[{0, 0}] = std::move(v); }

    static QTScalar monomial(BigInt coeff, int qe, int te);
    static QTScalar q(int e = 1) { return monomial(1, e, 0); }
    static QTScalar t(int e = 1) { return monomial(1, 0, e); }
    static QTScalar one() { return QTScalar(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // A single term (or zero, when allow_zero).
    bool is_monomial(bool allow_zero = true) const;
    BigInt coeff(int qe, int te) const;
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    int min_q_exp() const;
    int max_q_exp() const;
    int min_t_exp() const;
    int max_t_exp() const;
    bool depends_on_t() const;
    bool depends_on_q() const;

    void add_term(const Monomial& m, const BigInt& c);

    QTScalar& operator+=(const QTScalar& o);
    QTScalar& operator-=(const QTScalar& o);
    QTScalar& operator*=(const QTScalar& o);
    friend QTScalar operator+(QTScalar a, const QTScalar& b) { a += b; return a; }
    friend QTScalar operator-(QTScalar a, const QTScalar& b) { a -= b; return a; }
    friend QTScalar operator*(const QTScalar& a, const QTScalar& b);
    QTScalar operator-() const;
    QTScalar pow(int k) const;  // k >= 0

    friend bool operator==(const QTScalar& a, const QTScalar& b) { return a.terms_ == b.terms_; }

    std::string str() const;

    // q^a t^b -> image(q)^a * image(t)^b, exactly.  An integer image with a
    // negative exponent is rejected unless it is +-1 (0^k vanishes for k > 0).
    QTScalar substitute(const Subst& q_to, const Subst& t_to) const;
    QTScalar swap_qt() const { return substitute(Subst::t(), Subst::q()); }
    QTScalar at(long long qv, long long tv) const {
        return substitute(Subst::integer(qv), Subst::integer(tv));
    }

private:
    TermMap terms_;
};

// Exact division: returns num/den when den divides num exactly, nullopt
// otherwise.  den must be nonzero.
std::optional<QTScalar> div_exact(const QTScalar& num, const QTScalar& den);

}  // namespace ncsf
