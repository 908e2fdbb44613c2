#include "ncsf/hall_littlewood.hpp"

#include <numeric>
#include <stdexcept>

namespace ncsf {

namespace {

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

NSymElement apply_rows(const Composition& a, const NSymElement& x, const QTScalar& attach_weight) {
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement out(xs.degree() + a.size(), NSymBasis::s);
    for (const auto& [b, c] : xs.terms()) {
        out.add_term(b.concat(a), c);
        if (!attach_weight.is_zero()) out.add_term(b.attach(a), attach_weight * c);
    }
    return out;
}

}  // namespace

NSymElement apply_A(const Composition& a, const NSymElement& x) {
    return apply_rows(a, x, QTScalar());
}

NSymElement apply_B(const Composition& a, const NSymElement& x) {
    if (a.empty()) throw std::invalid_argument("attach requires a nonempty index");
    NSymElement xs = convert(x, NSymBasis::s);
    NSymElement out(xs.degree() + a.size(), NSymBasis::s);
    for (const auto& [b, c] : xs.terms()) out.add_term(b.attach(a), c);
    return out;
}

NSymElement apply_Atilde_q(const Composition& a, const NSymElement& x) {
    int n = x.degree();
    if (n == 0) {
        NSymElement out(a.size(), NSymBasis::s);
        out.add_term(a, counit(convert(x, NSymBasis::s)));
        return out;
    }
    return apply_rows(a, x, QTScalar::q(n));
}

namespace {

NSymElement H_family(const Composition& a, bool in_t) {
    NSymElement out(a.size(), NSymBasis::s);
    for (const auto& b : coarsenings(a)) {
        int e = c_stat(a, b.complement());
        out.add_term(b, QTScalar::monomial(1, in_t ? 0 : e, in_t ? e : 0));
    }
    return out;
}

}  // namespace

NSymElement H_q(const Composition& a) { return H_family(a, false); }
NSymElement H_t(const Composition& a) { return H_family(a, true); }

NSymElement H_q_by_operators(const Composition& a) {
    NSymElement acc = NSymElement::unit(NSymBasis::s, Composition());
    for (int part : a.parts()) acc = apply_Atilde_q(Composition({part}), acc);
    return acc;
}

Composition bre(const Composition& a, const Composition& b) {
    if (!a.refines(b)) throw std::invalid_argument("bre requires b coarser than a");
    std::vector<int> da = a.descents();
    std::vector<int> d;
    for (int drop : b.descents()) {
        int count = 0;
        for (int v : da) {
            if (v <= drop) ++count;
        }
        d.push_back(count);
    }
    return Composition::from_descents(d, a.length());
}

NSymElement W_q(const Composition& a) {
    NSymElement out(a.size(), NSymBasis::s);
    for (const auto& b : coarsenings(a)) {
        out.add_term(b, QTScalar::q(bre(a, b).complement().n_stat()));
    }
    return out;
}

NSymElement W_q_by_recurrence(const Composition& a) {
    NSymElement acc = NSymElement::unit(NSymBasis::s, Composition());
    int length = 0;
    for (int part : a.parts()) {
        Composition m({part});
        NSymElement next = apply_A(m, acc);
        if (length > 0) next += QTScalar::q(length) * apply_B(m, acc);
        acc = std::move(next);
        ++length;
    }
    return acc;
}

namespace {

NSymElement product_rule(const Composition& a, const Composition& b, bool hq_times_hq) {
    if (a.empty() || b.empty()) throw std::invalid_argument("product rule requires nonempty indices");
    QTScalar one_minus_qa = QTScalar::one() - QTScalar::q(a.size());
    NSymElement out(a.size() + b.size(), NSymBasis::Hq);
    for (const auto& g : coarsenings(b)) {
        QTScalar w;
        if (hq_times_hq) {
            w = QTScalar::q(c_stat(b, g.complement())) * one_minus_qa.pow(b.length() - g.length());
        } else {
            w = QTScalar(sign_pow(b.length() - g.length())) *
                QTScalar::q(c_stat(a.concat(b), a.concat(g).complement()));
        }
        out.add_term(a.concat(g), w);
        out.add_term(a.attach(g), w * one_minus_qa);
    }
    return out;
}

}  // namespace

NSymElement product_Hq_s(const Composition& a, const Composition& b) {
    return product_rule(a, b, false);
}

NSymElement product_Hq_Hq(const Composition& a, const Composition& b) {
    return product_rule(a, b, true);
}

NSymElement expand_Hq(const NSymElement& x) {
    if (x.basis() != NSymBasis::Hq) throw std::invalid_argument("expand_Hq requires the Hq tag");
    NSymElement out(x.degree(), NSymBasis::s);
    for (const auto& [a, c] : x.terms()) out += c * H_q(a);
    return out;
}

RootOfUnityCheck check_root_of_unity_factorization(const Composition& a, int r,
                                                   const std::vector<int>& block_lengths) {
    if (r < 2) throw std::invalid_argument("root order must be at least 2");
    int total = std::accumulate(block_lengths.begin(), block_lengths.end(), 0);
    if (total != a.length() || block_lengths.empty()) {
        throw std::invalid_argument("split must cover all parts");
    }
    std::vector<Composition> blocks;
    int pos = 0;
    for (int len : block_lengths) {
        if (len < 1) throw std::invalid_argument("split blocks must be nonempty");
        std::vector<int> parts(a.parts().begin() + pos, a.parts().begin() + pos + len);
        blocks.emplace_back(std::move(parts));
        pos += len;
    }
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        if (blocks[i].size() % r != 0) {
            throw std::invalid_argument("interior split block size not divisible by r");
        }
    }
    NSymElement prod = NSymElement::unit(NSymBasis::s, Composition());
    for (const auto& blk : blocks) prod = multiply(prod, H_q(blk));
    NSymElement diff = H_q(a) - prod;
    for (const auto& [idx, c] : diff.terms()) {
        CyclotomicScalar res = CyclotomicScalar::reduce(c, r);
        if (!res.is_zero()) {
            return {false, idx, "coefficient of s" + idx.str() + " reduces to " + res.str()};
        }
    }
    return {true, Composition(), ""};
}

std::vector<std::vector<int>> valid_splits(const Composition& a, int r) {
    std::vector<std::vector<int>> out;
    int l = a.length();
    if (l == 0) return out;
    // cut positions between parts: bits of a mask over l-1 slots
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (l - 1)); ++mask) {
        std::vector<int> lengths;
        int run = 0, size = 0;
        bool ok = true;
        for (int i = 0; i < l; ++i) {
            ++run;
            size += a.parts()[i];
            bool cut = i + 1 < l && (mask & (std::uint64_t{1} << i));
            if (cut) {
                if (size % r != 0) {
                    ok = false;
                    break;
                }
                lengths.push_back(run);
                run = 0;
                size = 0;
            }
        }
        if (!ok) continue;
        lengths.push_back(run);
        out.push_back(std::move(lengths));
    }
    return out;
}

}  // namespace ncsf
