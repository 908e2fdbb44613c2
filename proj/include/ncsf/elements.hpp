#pragma once

#include "ncsf/composition.hpp"
#include "ncsf/factored_scalar.hpp"
#include "ncsf/qt_scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncsf {

// Bases of NSym.  h, e, s are the computational bases; the remaining tags
// mark formal expansions indexed by the q- and q,t-families (used e.g. by the
// product rules, which return combinations of H^q's).
enum class NSymBasis { h, e, s, Hq, Htq, Hqt, Htilde };
enum class QSymBasis { M, F };

std::string basis_name(NSymBasis b);
std::string basis_name(QSymBasis b);

// A degree-homogeneous element stored as a sparse map key -> coefficient in
// one declared basis.  Keys all have the element's degree; zero coefficients
// are never stored.  Iteration order is the key order (phi index for
// compositions), which fixes the text form.
template <class Key, class Coeff, class Basis>
class Expansion {
public:
    using TermMap = std::map<Key, Coeff>;

    Expansion() = default;
    Expansion(int degree, Basis basis) : degree_(degree), basis_(basis) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    static Expansion unit(Basis basis, const Key& key) {
        Expansion x(key.size(), basis);
        x.add_term(key, Coeff(QTScalar::one()));
        return x;
    }

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Coeff coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff() : it->second;
    }

    void add_term(const Key& key, const Coeff& c) {
        if (c.is_zero()) return;
        if (key.size() != degree_) throw std::invalid_argument("term degree mismatch");
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Expansion& operator+=(const Expansion& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Expansion& operator-=(const Expansion& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, Coeff() - c);
        return *this;
    }
    friend Expansion operator+(Expansion a, const Expansion& b) { a += b; return a; }
    friend Expansion operator-(Expansion a, const Expansion& b) { a -= b; return a; }
    Expansion operator-() const {
        Expansion out(degree_, basis_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, Coeff() - c);
        return out;
    }

    friend Expansion operator*(const Coeff& c, const Expansion& x) {
        Expansion out(x.degree_, x.basis_);
        for (const auto& [k, v] : x.terms_) out.add_term(k, c * v);
        return out;
    }

    friend bool operator==(const Expansion& a, const Expansion& b) {
        if (a.degree_ != b.degree_ || a.basis_ != b.basis_) return false;
        if constexpr (std::is_same_v<Coeff, QTScalar>) {
            return a.terms_ == b.terms_;
        } else {
            // Factored coefficients compare as rational values.
            if (a.terms_.size() != b.terms_.size()) return false;
            auto ia = a.terms_.begin();
            auto ib = b.terms_.begin();
            for (; ia != a.terms_.end(); ++ia, ++ib) {
                if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
            }
            return true;
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string cs = c.str();
            bool negated = false;
            if (!first && cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
                cs = cs.substr(1);
                negated = true;
            }
            if (!first) out += negated ? " - " : " + ";
            if (cs == "1") {
                out += label(k);
            } else if (cs == "-1") {
                out += "-" + label(k);
            } else if (cs.find(' ') != std::string::npos) {
                out += "(" + cs + ")*" + label(k);
            } else {
                out += cs + "*" + label(k);
            }
            first = false;
        }
        return out;
    }

private:
    std::string label(const Key& key) const { return basis_name(basis_) + key.str(); }

    void require_compatible(const Expansion& o) const {
        if (degree_ != o.degree_ || basis_ != o.basis_) {
            throw std::invalid_argument("element degree/basis mismatch");
        }
    }

    int degree_ = 0;
    Basis basis_ = Basis{};
    TermMap terms_;
};

using NSymElement = Expansion<Composition, QTScalar, NSymBasis>;
using NSymElementF = Expansion<Composition, FactoredScalar, NSymBasis>;
using QSymElement = Expansion<Composition, QTScalar, QSymBasis>;
using QSymElementF = Expansion<Composition, FactoredScalar, QSymBasis>;

// An element of NSym (x) NSym, all keys (b, c) with |b| + |c| equal to the
// total degree.  Both legs are expanded in the same basis.
class NSymTensor {
public:
    using Key = std::pair<Composition, Composition>;

    NSymTensor(int total_degree, NSymBasis basis) : degree_(total_degree), basis_(basis) {}

    int degree() const { return degree_; }
    NSymBasis basis() const { return basis_; }
    const std::map<Key, QTScalar>& terms() const { return terms_; }

    QTScalar coeff(const Composition& a, const Composition& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? QTScalar() : it->second;
    }

    void add_term(const Composition& a, const Composition& b, const QTScalar& c) {
        if (c.is_zero()) return;
        if (a.size() + b.size() != degree_) throw std::invalid_argument("tensor degree mismatch");
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, b}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NSymTensor& operator+=(const NSymTensor& o);
    friend bool operator==(const NSymTensor& a, const NSymTensor& b) {
        return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int degree_ = 0;
    NSymBasis basis_ = NSymBasis::h;
    std::map<Key, QTScalar> terms_;
};

// Coefficient-wise variable substitution.
template <class Key, class Basis>
Expansion<Key, QTScalar, Basis> substitute_coeffs(const Expansion<Key, QTScalar, Basis>& x,
                                                  const Subst& q_to, const Subst& t_to) {
    Expansion<Key, QTScalar, Basis> out(x.degree(), x.basis());
    for (const auto& [k, c] : x.terms()) out.add_term(k, c.substitute(q_to, t_to));
    return out;
}

template <class Key, class Basis>
Expansion<Key, QTScalar, Basis> swap_qt_coeffs(const Expansion<Key, QTScalar, Basis>& x) {
    return substitute_coeffs(x, Subst::t(), Subst::q());
}

inline NSymElementF swap_qt_coeffs(const NSymElementF& x) {
    NSymElementF out(x.degree(), x.basis());
    for (const auto& [k, c] : x.terms()) out.add_term(k, c.swap_qt());
    return out;
}

// Lossless embedding of exact coefficients into factored ones.
template <class Key, class Basis>
Expansion<Key, FactoredScalar, Basis> to_factored(const Expansion<Key, QTScalar, Basis>& x) {
    Expansion<Key, FactoredScalar, Basis> out(x.degree(), x.basis());
    for (const auto& [k, c] : x.terms()) out.add_term(k, FactoredScalar(c));
    return out;
}

}  // namespace ncsf
