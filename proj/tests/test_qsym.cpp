#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncsf/hall_littlewood.hpp"
#include "ncsf/macdonald.hpp"
#include "ncsf/qsym.hpp"

#include <random>

using namespace ncsf;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

QSymElement F_unit(std::vector<int> parts) {
    return QSymElement::unit(QSymBasis::F, C(std::move(parts)));
}
QSymElement M_unit(std::vector<int> parts) {
    return QSymElement::unit(QSymBasis::M, C(std::move(parts)));
}

}  // namespace

TEST_CASE("pairing on basis elements") {
    CHECK(pair(M_unit({2, 1}), NSymElement::unit(NSymBasis::h, C({2, 1}))) == QTScalar::one());
    CHECK(pair(F_unit({1, 2}), NSymElement::unit(NSymBasis::s, C({2, 1}))) == QTScalar());
    CHECK(pair(F_unit({2}), NSymElement::unit(NSymBasis::h, C({1, 1}))) == QTScalar::one());
    CHECK_THROWS_AS(pair(F_unit({2}), NSymElement::unit(NSymBasis::s, C({3}))),
                    std::invalid_argument);
    // [M_a, h_b] = delta and [F_a, s_b] = delta, exhaustively to degree 5
    for (int n = 0; n <= 5; ++n) {
        for (const auto& a : all_compositions(n)) {
            for (const auto& b : all_compositions(n)) {
                QTScalar expected(a == b ? 1 : 0);
                CHECK(pair(QSymElement::unit(QSymBasis::M, a),
                           NSymElement::unit(NSymBasis::h, b)) == expected);
                CHECK(pair(QSymElement::unit(QSymBasis::F, a),
                           NSymElement::unit(NSymBasis::s, b)) == expected);
            }
        }
    }
}

TEST_CASE("M/F conversion") {
    CHECK(convert(F_unit({2}), QSymBasis::M) == M_unit({2}) + M_unit({1, 1}));
    CHECK(convert(F_unit({1, 1, 1}), QSymBasis::M) == M_unit({1, 1, 1}));
    for (int n = 0; n <= 6; ++n) {
        for (const auto& a : all_compositions(n)) {
            QSymElement m = QSymElement::unit(QSymBasis::M, a);
            QSymElement f = QSymElement::unit(QSymBasis::F, a);
            CHECK(convert(convert(m, QSymBasis::F), QSymBasis::M) == m);
            CHECK(convert(convert(f, QSymBasis::M), QSymBasis::F) == f);
        }
    }
}

TEST_CASE("pairing is invariant under basis conversion on both sides") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            QSymElement A(n, QSymBasis::M);
            NSymElement B(n, NSymBasis::h);
            for (const auto& a : all_compositions(n)) {
                A.add_term(a, QTScalar(coef(rng)));
                B.add_term(a, QTScalar(coef(rng)));
            }
            QTScalar base = pair(A, B);
            CHECK(pair(convert(A, QSymBasis::F), B) == base);
            CHECK(pair(A, convert(B, NSymBasis::s)) == base);
            CHECK(pair(convert(A, QSymBasis::F), convert(B, NSymBasis::e)) == base);
        }
    }
}

TEST_CASE("duals of the self-dual families") {
    // dual of {s} is {F}, dual of {h} is {M}
    for (int n = 1; n <= 5; ++n) {
        auto ds = dual_of([](const Composition& a) { return NSymElement::unit(NSymBasis::s, a); }, n);
        REQUIRE(ds.orthogonal);
        CHECK(ds.diagonal == QTScalar::one());
        auto dh = dual_of([](const Composition& a) { return NSymElement::unit(NSymBasis::h, a); }, n);
        REQUIRE(dh.orthogonal);
        for (const auto& a : all_compositions(n)) {
            CHECK(ds.dual.at(a) == to_factored(QSymElement::unit(QSymBasis::F, a)));
            CHECK(dh.dual.at(a) == to_factored(convert(QSymElement::unit(QSymBasis::M, a), QSymBasis::F)));
        }
    }
}

TEST_CASE("dual_of rejects a non-orthogonal family with a witness") {
    auto bad = dual_of([](const Composition& a) { return NSymElement::unit(NSymBasis::e, a); }, 2);
    CHECK_FALSE(bad.orthogonal);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("[dual_of(A)_a, A_b] = delta for A in {s, h, Hq, Hqt}, degree <= 5") {
    using Family = NSymElement (*)(const Composition&);
    Family s_fam = [](const Composition& a) { return NSymElement::unit(NSymBasis::s, a); };
    Family h_fam = [](const Composition& a) { return NSymElement::unit(NSymBasis::h, a); };
    Family hq_fam = [](const Composition& a) { return H_q(a); };
    Family hqt_fam = [](const Composition& a) { return H_qt(a); };
    for (Family fam : {s_fam, h_fam, hq_fam, hqt_fam}) {
        for (int n = 1; n <= 5; ++n) {
            auto d = dual_of(fam, n);
            REQUIRE(d.orthogonal);
            for (const auto& a : all_compositions(n)) {
                for (const auto& b : all_compositions(n)) {
                    FactoredScalar got = pair(d.dual.at(a), fam(b));
                    CHECK(got == FactoredScalar(QTScalar(a == b ? 1 : 0)));
                }
            }
        }
    }
}

TEST_CASE("P^q closed form") {
    CHECK(P_q(C({2})) == F_unit({2}) - QTScalar::q() * F_unit({1, 1}));
    CHECK(pair(P_q(C({2})), H_q(C({1, 1}))) == QTScalar());
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : all_compositions(n)) {
            for (const auto& b : all_compositions(n)) {
                CHECK(pair(P_q(a), H_q(b)) == QTScalar(a == b ? 1 : 0));
            }
        }
    }
    // and the closed form is exactly what dual_of produces
    for (int n = 1; n <= 4; ++n) {
        auto d = dual_of([](const Composition& a) { return H_q(a); }, n);
        REQUIRE(d.orthogonal);
        for (const auto& a : all_compositions(n)) CHECK(d.dual.at(a) == to_factored(P_q(a)));
    }
}

TEST_CASE("P^qt closed form is dual to H^qt") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& a : all_compositions(n)) {
            QSymElementF p = P_qt(a);
            for (const auto& b : all_compositions(n)) {
                CHECK(pair(p, H_qt(b)) == FactoredScalar(QTScalar(a == b ? 1 : 0)));
            }
        }
    }
}

TEST_CASE("G^q is dual to W^q") {
    CHECK(G_q_hivert(C({1, 1})) == F_unit({1, 1}) - QTScalar::q() * F_unit({2}));
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : all_compositions(n)) {
            QSymElement g = G_q_hivert(a);
            for (const auto& b : all_compositions(n)) {
                CHECK(pair(g, W_q(b)) == QTScalar(a == b ? 1 : 0));
            }
        }
    }
}
