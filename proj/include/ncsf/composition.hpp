#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ncsf {

// An integer composition: an ordered sequence of positive parts.  Compositions
// of n are the index set of every basis in this library; they correspond
// bijectively to subsets of {1,...,n-1} through their descent sets
//   D(a) = {a_1, a_1+a_2, ..., a_1+...+a_{l-1}}.
//
// Values are immutable; equality and ordering are structural.  The map order
// sorts first by size, then by phi index (see phi_index below), so that
// iterating the terms of a homogeneous element visits compositions in the
// appendix row/column order.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    // Composition of n with the given descent set (ascending, in 1..n-1).
    static Composition from_descents(const std::vector<int>& descents, int n);
    // Composition of n whose descent set is the bit set of `mask` (bit i-1 set
    // means i is a descent).  The mask is exactly the phi index.
    static Composition from_mask(std::uint64_t mask, int n);
    // Accepts "(2,4,3,1)", "2,4,3,1", "()" and the hook shorthand "1^3,2".
    static Composition parse(const std::string& text);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    std::vector<int> descents() const;
    std::uint64_t descent_mask() const;
    // phi(a) = sum of 2^{i-1} over descents i; a bijection between the
    // compositions of n and {0,...,2^{n-1}-1} whose induced total order
    // refines the partial refinement order.
    std::uint64_t phi_index() const { return descent_mask(); }

    Composition concat(const Composition& other) const;
    Composition attach(const Composition& other) const;

    // true iff this refines `coarser` (this <= coarser), i.e. D(coarser) is a
    // subset of D(this).  Both must have the same size.
    bool refines(const Composition& coarser) const;

    Composition reversed() const;
    Composition complement() const;
    Composition conjugate() const;

    // n(a) = sum of the descents of a.
    int n_stat() const;

    // (1^a, b) shapes, the compositions that sort to a partition.
    bool is_hook() const;

    std::string str() const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        return a.descent_mask() <=> b.descent_mask();
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// c(a,b) = sum of the common descents of a and b; requires |a| = |b|.
int c_stat(const Composition& a, const Composition& b);

// All 2^{n-1} compositions of n (one for n = 0), sorted by phi index.
std::vector<Composition> all_compositions(int n);

// All b >= a (b coarser than a): the subsets of D(a).
std::vector<Composition> coarsenings(const Composition& a);
// All b <= a (b finer than a): the supersets of D(a).
std::vector<Composition> refinements(const Composition& a);

// A ribbon presented as a skew pair of partitions, outer/inner.
struct SkewRibbon {
    std::vector<int> outer;
    std::vector<int> inner;
    std::string str() const;
};

// The skew partition whose diagram is the ribbon of `a`; the cell count of
// outer minus inner equals |a|.
SkewRibbon to_ribbon_skew(const Composition& a);

}  // namespace ncsf
