#pragma once

#include "ncsf/elements.hpp"
#include "ncsf/nsym.hpp"

#include <string>
#include <vector>

namespace ncsf {

// A partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition sorted_from(const Composition& a);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    std::string str() const;

    Partition merged(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.parts_ > b.parts_;  // within a degree, reverse lexicographic
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class SymBasis { h, e };
std::string basis_name(SymBasis b);

using SymElement = Expansion<Partition, QTScalar, SymBasis>;

// The forgetful surjection chi: NSym -> Sym, h_a -> h_{sort(a)}, taken through
// the h route by default or the e route on request.
SymElement chi(const NSymElement& x, SymBasis route = SymBasis::h);

// h <-> e in the commutative image, obtained by applying chi to the NSym
// conversion of each key.
SymElement convert(const SymElement& x, SymBasis target);

// Product in a multiplicative basis: indices merge.
SymElement multiply(const SymElement& x, const SymElement& y);

// The two Hall pairings needed here: <h_lambda, h_{1^n}> is the multinomial
// n!/prod(lambda_i!), and <h_lambda, e_n> = delta_{lambda,(1^n)}.
QTScalar pair_h1n(const SymElement& x);
QTScalar pair_en(const SymElement& x);

// Brute-force count of the surjections [n] -> [k] over all 1 <= k <= n
// (preferential arrangements); 1 <= n <= 9.
long long fubini_oracle(int n);

// Frobenius series of the preferential-arrangement module:
// sum_{a |= n} q^{n(a')} h_a, collected over sorted indices.
SymElement frobenius_pref(int n);

// The commutative nabla(e_n) at t = 1 via the staircase formula
// sum_{mu inside (n-1,...,1,0)} q^{binom(n,2)-|mu|} e_{lambda(mu)}, where
// lambda(mu) records the part multiplicities of mu with n - l(mu) appended;
// zero parts are dropped (e_0 = 1).
SymElement nabla_en_t1_commutative(int n);

// Staircase formula minus chi(nabla(e_n))|_{t=1} in the e basis.  Every
// coefficient must be a polynomial in q alone with nonnegative integer
// coefficients (verified; a violation throws).
SymElement e_positivity_gap(int n);

}  // namespace ncsf
