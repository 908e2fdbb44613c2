#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsf/composition.hpp"

#include <set>

using namespace ncsf;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("descent sets") {
    CHECK(C({2, 4, 3, 1}).descents() == std::vector<int>{2, 6, 9});
    CHECK(C({5}).descents().empty());
    CHECK(C({1, 1, 1}).descents() == std::vector<int>{1, 2});
    CHECK(Composition().descents().empty());
    CHECK(Composition().size() == 0);
    CHECK(Composition().length() == 0);
}

TEST_CASE("descent set round trip and cardinality") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& a : all_compositions(n)) {
            auto d = a.descents();
            if (n >= 1) CHECK(static_cast<int>(d.size()) == a.length() - 1);
            CHECK(Composition::from_descents(d, n) == a);
        }
    }
}

TEST_CASE("concat and attach") {
    CHECK(C({2, 1}).concat(C({1, 2})) == C({2, 1, 1, 2}));
    CHECK(C({2, 1}).attach(C({1, 2})) == C({2, 2, 2}));
    CHECK(Composition().concat(C({3})) == C({3}));
    CHECK(C({2, 1}).concat(C({1, 2})).size() == 6);
    CHECK(C({2, 1}).attach(C({1, 2})).size() == 6);
    CHECK_THROWS_AS(Composition().attach(C({1})), std::invalid_argument);
    CHECK_THROWS_AS(C({1}).attach(Composition()), std::invalid_argument);
}

TEST_CASE("refinement order") {
    CHECK(C({1, 1, 1}).refines(C({3})));
    CHECK_FALSE(C({1, 2}).refines(C({2, 1})));
    CHECK(C({1, 2}).refines(C({1, 2})));
    CHECK_THROWS_AS(C({1}).refines(C({2})), std::invalid_argument);
}

TEST_CASE("involutions on the figure example") {
    Composition a({2, 4, 3, 1});
    CHECK(a.reversed() == C({1, 3, 4, 2}));
    CHECK(a.complement() == C({1, 2, 1, 1, 2, 1, 2}));
    CHECK(a.conjugate() == C({2, 1, 2, 1, 1, 2, 1}));
}

TEST_CASE("involution laws, exhaustive to size 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& a : all_compositions(n)) {
            CHECK(a.reversed().reversed() == a);
            CHECK(a.complement().complement() == a);
            CHECK(a.conjugate().conjugate() == a);
            CHECK(a.reversed().complement() == a.complement().reversed());
            CHECK(a.conjugate() == a.reversed().complement());
            if (n >= 1) CHECK(a.length() + a.complement().length() == n + 1);
            CHECK(a.n_stat() + a.complement().n_stat() == n * (n - 1) / 2);
        }
    }
}

TEST_CASE("n and c statistics") {
    CHECK(C({1, 1, 1}).n_stat() == 3);
    CHECK(C({6}).n_stat() == 0);
    CHECK(C({2, 4, 3, 1}).n_stat() == 17);
    CHECK(c_stat(C({1, 2}), C({2, 1})) == 0);
    CHECK(c_stat(C({1, 1, 1}), C({1, 1, 1})) == 3);
    CHECK(c_stat(C({2, 1, 1}), C({4})) == 0);
    CHECK_THROWS_AS(c_stat(C({2}), C({3})), std::invalid_argument);
}

TEST_CASE("phi order") {
    auto comps = all_compositions(3);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == C({3}));
    CHECK(comps[1] == C({1, 2}));
    CHECK(comps[2] == C({2, 1}));
    CHECK(comps[3] == C({1, 1, 1}));
    CHECK(C({1, 2, 1}).phi_index() == 5);
    CHECK(C({7}).phi_index() == 0);
    CHECK(all_compositions(0).size() == 1);
    for (int n = 0; n <= 8; ++n) {
        auto all = all_compositions(n);
        CHECK(all.size() == (n == 0 ? 1u : (1u << (n - 1))));
        for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].phi_index() == i);
    }
}

TEST_CASE("phi order refines the refinement order") {
    // Only containment of relations is claimed: a <= b implies phi(a) >= ...
    // phi lists coarser first exactly when the descent mask is numerically
    // smaller, i.e. b coarser than a gives phi(b) <= phi(a).
    for (int n = 1; n <= 8; ++n) {
        for (const auto& a : all_compositions(n)) {
            for (const auto& b : all_compositions(n)) {
                if (a.refines(b)) CHECK(b.phi_index() <= a.phi_index());
            }
        }
    }
}

TEST_CASE("ribbon skew shapes") {
    SkewRibbon r = to_ribbon_skew(C({2, 4, 3, 1}));
    CHECK(r.outer == std::vector<int>{7, 7, 5, 2});
    CHECK(r.inner == std::vector<int>{6, 4, 1});
    CHECK(to_ribbon_skew(C({5})).outer == std::vector<int>{5});
    CHECK(to_ribbon_skew(C({5})).inner.empty());
    CHECK(to_ribbon_skew(C({1, 1})).outer == std::vector<int>{1, 1});
    CHECK(to_ribbon_skew(C({1, 1})).inner.empty());
    CHECK_THROWS_AS(to_ribbon_skew(Composition()), std::invalid_argument);
}

TEST_CASE("ribbon invariants: containment, cell count, no 2x2 block") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& a : all_compositions(n)) {
            SkewRibbon r = to_ribbon_skew(a);
            int cells = 0;
            std::set<std::pair<int, int>> cellset;
            for (size_t row = 0; row < r.outer.size(); ++row) {
                int lo = row < r.inner.size() ? r.inner[row] : 0;
                CHECK(lo <= r.outer[row]);
                cells += r.outer[row] - lo;
                for (int col = lo; col < r.outer[row]; ++col) cellset.insert({(int)row, col});
            }
            CHECK(cells == n);
            for (auto [row, col] : cellset) {
                bool square = cellset.count({row + 1, col}) && cellset.count({row, col + 1}) &&
                              cellset.count({row + 1, col + 1});
                CHECK_FALSE(square);
            }
        }
    }
}

TEST_CASE("text form and parsing") {
    CHECK(C({2, 4, 3, 1}).str() == "(2,4,3,1)");
    CHECK(Composition().str() == "()");
    CHECK(Composition::parse("(2,4,3,1)") == C({2, 4, 3, 1}));
    CHECK(Composition::parse("()") == Composition());
    CHECK(Composition::parse("1^3,2") == C({1, 1, 1, 2}));
    CHECK(Composition::parse("(1^2,3)") == C({1, 1, 3}));
    CHECK_THROWS_AS(Composition::parse("(1,,2)"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("(0,2)"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("abc"), std::invalid_argument);
}
