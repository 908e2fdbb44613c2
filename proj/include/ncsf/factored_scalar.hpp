#pragma once

#include "ncsf/qt_scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncsf {

// A rational scalar kept in factored form: a QTScalar numerator over a
// denominator that is a product of factors (1 - q^a t^b) with a >= 1, b >= 0.
// Every denominator appearing in this theory has that shape, so trial
// division is enough to verify identities exactly; no multivariate GCD is
// needed.  A FactoredScalar with an empty denominator embeds a QTScalar
// losslessly.
class FactoredScalar {
public:
    // factor (a, b) -> multiplicity of (1 - q^a t^b)
    using DenMap = std::map<std::pair<int, int>, int>;

    FactoredScalar() = default;
    FactoredScalar(QTScalar num) : num_(std::move(num)) {}
    FactoredScalar(long long v) : num_(v) {}
    FactoredScalar(QTScalar num, DenMap den);

    // 1 / (1 - q^a t^b)
    static FactoredScalar inverse_factor(int a, int b);
    static FactoredScalar one() { return FactoredScalar(QTScalar::one()); }

    const QTScalar& num() const { return num_; }
    const DenMap& den() const { return den_; }
    QTScalar den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }

    FactoredScalar& operator+=(const FactoredScalar& o);
    FactoredScalar& operator-=(const FactoredScalar& o);
    FactoredScalar& operator*=(const FactoredScalar& o);
    friend FactoredScalar operator+(FactoredScalar a, const FactoredScalar& b) { a += b; return a; }
    friend FactoredScalar operator-(FactoredScalar a, const FactoredScalar& b) { a -= b; return a; }
    friend FactoredScalar operator*(FactoredScalar a, const FactoredScalar& b) { a *= b; return a; }
    FactoredScalar operator-() const { return FactoredScalar(-num_, den_); }

    // Equality of the represented rational values (cross-multiplied).
    friend bool operator==(const FactoredScalar& a, const FactoredScalar& b);

    // Removes denominator factors that divide the numerator exactly.
    FactoredScalar cancelled() const;

    // 1/x, when the numerator can be recognized by trial division as
    // +-(monomial) * product of (1 - q^a t^b) factors; nullopt otherwise.
    std::optional<FactoredScalar> reciprocal() const;

    FactoredScalar swap_qt() const;

    std::string str() const;

private:
    QTScalar num_;
    DenMap den_;
};

// Expanded product of (1 - q^a t^b)^mult over the map.
QTScalar expand_factors(const FactoredScalar::DenMap& factors);

}  // namespace ncsf
