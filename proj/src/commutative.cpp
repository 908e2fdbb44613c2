#include "ncsf/commutative.hpp"

#include "ncsf/nabla.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ncsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::sorted_from(const Composition& a) {
    std::vector<int> p = a.parts();
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

std::string basis_name(SymBasis b) { return b == SymBasis::h ? "h" : "e"; }

SymElement chi(const NSymElement& x, SymBasis route) {
    NSymElement converted = convert(x, route == SymBasis::h ? NSymBasis::h : NSymBasis::e);
    SymElement out(x.degree(), route);
    for (const auto& [a, c] : converted.terms()) out.add_term(Partition::sorted_from(a), c);
    return out;
}

SymElement convert(const SymElement& x, SymBasis target) {
    if (x.basis() == target) return x;
    SymElement out(x.degree(), target);
    NSymBasis from = x.basis() == SymBasis::h ? NSymBasis::h : NSymBasis::e;
    NSymBasis to = target == SymBasis::h ? NSymBasis::h : NSymBasis::e;
    for (const auto& [lam, c] : x.terms()) {
        NSymElement image = convert(NSymElement::unit(from, Composition(lam.parts())), to);
        for (const auto& [a, v] : image.terms()) out.add_term(Partition::sorted_from(a), c * v);
    }
    return out;
}

SymElement multiply(const SymElement& x, const SymElement& y) {
    if (x.basis() != y.basis()) throw std::invalid_argument("product requires a common basis");
    SymElement out(x.degree() + y.degree(), x.basis());
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) out.add_term(a.merged(b), ca * cb);
    }
    return out;
}

QTScalar pair_h1n(const SymElement& x) {
    SymElement xh = convert(x, SymBasis::h);
    int n = x.degree();
    BigInt nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    QTScalar out;
    for (const auto& [lam, c] : xh.terms()) {
        BigInt multinomial = nfact;
        for (int p : lam.parts()) {
            BigInt pfact = 1;
            for (int i = 2; i <= p; ++i) pfact *= i;
            multinomial /= pfact;
        }
        out += QTScalar(multinomial) * c;
    }
    return out;
}

QTScalar pair_en(const SymElement& x) {
    SymElement xh = convert(x, SymBasis::h);
    int n = x.degree();
    if (n == 0) return xh.coeff(Partition());
    return xh.coeff(Partition(std::vector<int>(n, 1)));
}

long long fubini_oracle(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("fubini_oracle supports 1 <= n <= 9");
    long long total = 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> f(n, 0);  // values in 0..k-1
        while (true) {
            unsigned seen = 0;
            for (int v : f) seen |= 1u << v;
            if (seen == (1u << k) - 1) ++total;
            int pos = 0;
            while (pos < n && f[pos] == k - 1) f[pos++] = 0;
            if (pos == n) break;
            ++f[pos];
        }
    }
    return total;
}

SymElement frobenius_pref(int n) {
    if (n < 1) throw std::invalid_argument("frobenius_pref requires n >= 1");
    SymElement out(n, SymBasis::h);
    for (const auto& a : all_compositions(n)) {
        out.add_term(Partition::sorted_from(a), QTScalar::q(a.conjugate().n_stat()));
    }
    return out;
}

namespace {

// partitions mu with mu_i <= n - i, i.e. contained in the staircase
void staircase_partitions(int n, int row, int cap, std::vector<int>& mu,
                          const std::function<void(const std::vector<int>&)>& emit) {
    emit(mu);
    int bound = std::min(cap, n - 1 - row);
    for (int p = 1; p <= bound; ++p) {
        mu.push_back(p);
        staircase_partitions(n, row + 1, p, mu, emit);
        mu.pop_back();
    }
}

}  // namespace

SymElement nabla_en_t1_commutative(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("nabla_en_t1_commutative supports 1 <= n <= 8");
    SymElement out(n, SymBasis::e);
    int choose2 = n * (n - 1) / 2;
    std::vector<int> mu;
    staircase_partitions(n, 0, n, mu, [&](const std::vector<int>& m) {
        int weight = std::accumulate(m.begin(), m.end(), 0);
        std::vector<int> mult(n, 0);
        for (int p : m) ++mult[p];
        std::vector<int> lam;
        for (int i = 1; i <= n - 1; ++i) {
            if (mult[i] > 0) lam.insert(lam.end(), mult[i], i);
        }
        lam.push_back(n - static_cast<int>(m.size()));
        std::sort(lam.rbegin(), lam.rend());
        out.add_term(Partition(lam), QTScalar::q(choose2 - weight));
    });
    return out;
}

SymElement e_positivity_gap(int n) {
    NSymElement en = NSymElement::unit(NSymBasis::s, Composition(std::vector<int>(n, 1)));
    NSymElement nab = substitute_coeffs(nabla(en), Subst::q(), Subst::integer(1));
    SymElement gap = nabla_en_t1_commutative(n) - chi(nab, SymBasis::e);
    for (const auto& [lam, c] : gap.terms()) {
        for (const auto& [m, v] : c.terms()) {
            if (m.t != 0 || m.q < 0 || v < 0) {
                throw std::logic_error("positivity gap violated at e" + lam.str());
            }
        }
    }
    return gap;
}

}  // namespace ncsf
