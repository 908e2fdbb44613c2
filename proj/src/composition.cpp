#include "ncsf/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncsf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_descents(const std::vector<int>& descents, int n) {
    if (n < 0) throw std::invalid_argument("composition size must be nonnegative");
    std::vector<int> parts;
    int prev = 0;
    for (int d : descents) {
        if (d <= prev || d >= n) throw std::invalid_argument("descents must be ascending in 1..n-1");
        parts.push_back(d - prev);
        prev = d;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition Composition::from_mask(std::uint64_t mask, int n) {
    std::vector<int> descents;
    for (int i = 1; i < n; ++i) {
        if (mask & (std::uint64_t{1} << (i - 1))) descents.push_back(i);
    }
    if (n < 64 && (mask >> (n > 0 ? n - 1 : 0)) != 0) {
        throw std::invalid_argument("descent mask out of range for size n");
    }
    return from_descents(descents, n);
}

Composition Composition::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (s.empty()) return Composition();
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad composition: '" + text + "'");
        size_t caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                parts.push_back(std::stoi(tok));
            } else {
                int part = std::stoi(tok.substr(0, caret));
                int rep = std::stoi(tok.substr(caret + 1));
                if (rep < 0) throw std::invalid_argument("negative repeat");
                parts.insert(parts.end(), rep, part);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition: '" + text + "'");
        }
    }
    return Composition(std::move(parts));
}

std::vector<int> Composition::descents() const {
    std::vector<int> d;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        d.push_back(acc);
    }
    return d;
}

std::uint64_t Composition::descent_mask() const {
    if (size_ > 64) throw std::domain_error("descent mask supports size <= 64");
    std::uint64_t mask = 0;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        mask |= std::uint64_t{1} << (acc - 1);
    }
    return mask;
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> p = parts_;
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(p));
}

Composition Composition::attach(const Composition& other) const {
    if (empty() || other.empty()) {
        throw std::invalid_argument("attach requires nonempty compositions");
    }
    std::vector<int> p = parts_;
    p.back() += other.parts_.front();
    p.insert(p.end(), other.parts_.begin() + 1, other.parts_.end());
    return Composition(std::move(p));
}

bool Composition::refines(const Composition& coarser) const {
    if (size_ != coarser.size_) throw std::invalid_argument("refines requires equal sizes");
    std::uint64_t fine = descent_mask(), coarse = coarser.descent_mask();
    return (coarse & ~fine) == 0;
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

Composition Composition::complement() const {
    std::vector<int> d;
    std::uint64_t mask = descent_mask();
    for (int i = 1; i < size_; ++i) {
        if (!(mask & (std::uint64_t{1} << (i - 1)))) d.push_back(i);
    }
    return from_descents(d, size_);
}

Composition Composition::conjugate() const { return complement().reversed(); }

int Composition::n_stat() const {
    int total = 0;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        total += acc;
    }
    return total;
}

bool Composition::is_hook() const {
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] != 1) return false;
    }
    return true;
}

std::string Composition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

int c_stat(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("c_stat requires equal sizes");
    std::uint64_t common = a.descent_mask() & b.descent_mask();
    int total = 0;
    for (int i = 1; i < a.size(); ++i) {
        if (common & (std::uint64_t{1} << (i - 1))) total += i;
    }
    return total;
}

std::vector<Composition> all_compositions(int n) {
    if (n < 0) throw std::invalid_argument("all_compositions requires n >= 0");
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(Composition::from_mask(mask, n));
    return out;
}

std::vector<Composition> coarsenings(const Composition& a) {
    std::uint64_t d = a.descent_mask();
    std::vector<Composition> out;
    std::uint64_t sub = d;
    while (true) {
        out.push_back(Composition::from_mask(sub, a.size()));
        if (sub == 0) break;
        sub = (sub - 1) & d;
    }
    return out;
}

std::vector<Composition> refinements(const Composition& a) {
    std::uint64_t d = a.descent_mask();
    std::uint64_t full = a.size() > 0 ? (std::uint64_t{1} << (a.size() - 1)) - 1 : 0;
    std::uint64_t free = full & ~d;
    std::vector<Composition> out;
    std::uint64_t sub = free;
    while (true) {
        out.push_back(Composition::from_mask(d | sub, a.size()));
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
    return out;
}

std::string SkewRibbon::str() const {
    auto render = [](const std::vector<int>& v) {
        std::string out = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v[i]);
        }
        return out + ")";
    };
    return render(outer) + "/" + render(inner);
}

SkewRibbon to_ribbon_skew(const Composition& a) {
    if (a.empty()) throw std::invalid_argument("to_ribbon_skew requires a nonempty composition");
    int l = a.length();
    std::vector<int> partial(l + 1, 0);  // partial[k] = a_1 + ... + a_k
    for (int k = 1; k <= l; ++k) partial[k] = partial[k - 1] + a.parts()[k - 1];
    SkewRibbon skew;
    skew.outer.reserve(l);
    for (int j = 1; j <= l; ++j) skew.outer.push_back(partial[l + 1 - j] - (l - j));
    for (int j = 1; j <= l - 1; ++j) {
        int entry = partial[l - j] - (l - j);
        if (entry > 0) skew.inner.push_back(entry);
    }
    return skew;
}

}  // namespace ncsf
