#include <doctest.h>

#include <random>

#include "sprimary/ideal.hpp"

using namespace sprimary;

namespace {

RingPtr zmod(int n) { return construct_ring(json{{"kind", "zmod"}, {"n", n}}); }

std::vector<int> members(const Ideal& I) { return I.elems().to_list(); }

}  // namespace

TEST_CASE("ideal generation") {
    auto R = zmod(12);
    CHECK(members(ideal_generate(R, {{R, 4}})) == std::vector<int>{0, 4, 8});
    CHECK(ideal_generate(R, {}).is_zero());
    auto Z = Ring::integers();
    CHECK(ideal_generate(Z, {{Z, 6}, {Z, 10}}).zgen() == 2);
    CHECK(ideal_generate(Z, {}).zgen() == 0);
}

TEST_CASE("lattice operations") {
    auto Z = Ring::integers();
    auto zi = [&](Int n) { return Ideal::z_ideal(Z, n); };
    CHECK(ideal_intersect(zi(4), zi(6)).zgen() == 12);
    CHECK(ideal_sum(zi(4), zi(6)).zgen() == 2);
    CHECK(ideal_product(zi(4), zi(6)).zgen() == 24);

    auto R = zmod(12);
    Ideal i4 = ideal_generate(R, {{R, 4}});
    Ideal i3 = ideal_generate(R, {{R, 3}});
    CHECK(ideal_sum(i4, i3) == unit_ideal(R));
    CHECK(ideal_intersect(i4, i4) == i4);
    CHECK(members(ideal_intersect(i4, i3)) == std::vector<int>{0});
}

TEST_CASE("colon ideals") {
    auto Z = Ring::integers();
    CHECK(ideal_colon(Ideal::z_ideal(Z, 6), {Z, 2}).zgen() == 3);
    auto R = zmod(12);
    Ideal i4 = ideal_generate(R, {{R, 4}});
    CHECK(ideal_colon(i4, {R, 1}) == i4);
    // brute-force oracle over the 12 residues: 3a in {0,4,8} iff a in {0,4,8}
    {
        std::vector<int> brute;
        for (int a = 0; a < 12; ++a)
            if ((3 * a) % 12 == 0 || (3 * a) % 12 == 4 || (3 * a) % 12 == 8) brute.push_back(a);
        CHECK(members(ideal_colon(i4, {R, 3})) == brute);
        CHECK(brute == std::vector<int>{0, 4, 8});
    }
    // colon by an ideal
    CHECK(ideal_colon_ideal(Ideal::z_ideal(Z, 12), Ideal::z_ideal(Z, 4)).zgen() == 3);
    CHECK(ideal_colon_ideal(i4, i4) == unit_ideal(R));
}

TEST_CASE("radical") {
    auto R = zmod(12);
    Ideal i4 = ideal_generate(R, {{R, 4}});
    // oracle: exponents up to ring size
    std::vector<int> brute;
    for (int a = 0; a < 12; ++a) {
        long long x = a;
        for (int k = 1; k <= 12; ++k) {
            if (x == 0 || x == 4 || x == 8) {
                brute.push_back(a);
                break;
            }
            x = (x * a) % 12;
        }
    }
    CHECK(members(radical(i4)) == brute);
    CHECK(brute == std::vector<int>{0, 2, 4, 6, 8, 10});

    auto Z = Ring::integers();
    CHECK(radical(Ideal::z_ideal(Z, 36)).zgen() == 6);
    CHECK(radical(unit_ideal(R)) == unit_ideal(R));
    CHECK(radical(Ideal::z_ideal(Z, 0)).zgen() == 0);
}

TEST_CASE("saturation") {
    auto Z = Ring::integers();
    auto S3 = MultiplicativeSet::z_complement_of_prime(Z, 3);
    CHECK(saturation(Ideal::z_ideal(Z, 6), S3).zgen() == 3);
    CHECK(saturation(Ideal::z_ideal(Z, 12), S3).zgen() == 3);
    CHECK(saturation(Ideal::z_ideal(Z, 9), S3).zgen() == 9);
    CHECK(saturation(Ideal::z_ideal(Z, 6), mset_trivial(Z)).zgen() == 6);

    auto R = zmod(12);
    Ideal i4 = ideal_generate(R, {{R, 4}});
    CHECK(saturation(i4, mset_trivial(R)) == i4);
    auto S5 = mset_closure(R, {{R, 5}});
    CHECK(saturation(i4, S5) == i4);
}

TEST_CASE("saturation laws") {
    auto R = zmod(36);
    for (int g : {2, 3, 25, 35}) {
        auto S = mset_closure(R, {{R, g}});
        for (auto& I : enumerate_ideals(R)) {
            Ideal sat = saturation(I, S);
            // idempotence
            CHECK(saturation(sat, S) == sat);
            // union-of-colons form, and a single colon that attains it
            ElemSet uni(R->size());
            bool attained = false;
            S.elems().for_each([&](int s) {
                Ideal c = ideal_colon(I, {R, s});
                uni = uni | c.elems();
                if (c == sat) attained = true;
            });
            CHECK(uni == sat.elems());
            CHECK(attained);
        }
    }
}

TEST_CASE("ideal enumeration") {
    CHECK(enumerate_ideals(zmod(12)).size() == 6);  // one per divisor
    auto P = construct_ring(json::parse(
        R"({"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod","n":2}]})"));
    CHECK(enumerate_ideals(P).size() == 4);
    CHECK(enumerate_ideals(zmod(7)).size() == 2);
    CHECK_THROWS_AS(enumerate_ideals(Ring::integers()), ValidationError);
    // deterministic canonical order: cardinality then mask
    auto ideals = enumerate_ideals(zmod(12));
    for (size_t i = 1; i < ideals.size(); ++i) CHECK(ideals[i - 1].canonical_less(ideals[i]));
    // generator round-trip
    for (auto& I : ideals) {
        std::vector<RingElement> gs;
        for (Int g : I.gens()) gs.push_back({I.ring(), g});
        CHECK(ideal_generate(I.ring(), gs) == I);
    }
}

TEST_CASE("multiplicative closures") {
    auto R = zmod(12);
    CHECK(mset_closure(R, {{R, 5}}).elems().to_list() == std::vector<int>{1, 5});
    CHECK(mset_closure(R, {}).elems().to_list() == std::vector<int>{1});
    CHECK_THROWS_WITH_AS(mset_closure(R, {{R, 6}}), "multiplicative closure reached 0: 6*6 = 0",
                         ValidationError);
    CHECK_THROWS_AS(mset_closure(R, {{R, 0}}), ValidationError);
}

TEST_CASE("divided ideals") {
    auto R4 = zmod(4);
    CHECK(is_divided(nilradical(R4)));
    CHECK(is_divided(zero_ideal(R4)));
    auto R12 = zmod(12);
    CHECK(is_divided(zero_ideal(R12)));
    CHECK(!is_divided(ideal_generate(R12, {{R12, 2}})));
}

TEST_CASE("disjointness") {
    auto Z = Ring::integers();
    auto S3 = MultiplicativeSet::z_complement_of_prime(Z, 3);
    CHECK(disjoint_from(Ideal::z_ideal(Z, 6), S3));
    CHECK(!disjoint_from(Ideal::z_ideal(Z, 4), S3));
    CHECK(disjoint_from(Ideal::z_ideal(Z, 0), S3));
    auto T = MultiplicativeSet::z_prime_set(Z, {2, 5}, true);
    CHECK(disjoint_from(Ideal::z_ideal(Z, 12), T));   // 3 divides 12
    CHECK(!disjoint_from(Ideal::z_ideal(Z, 20), T));  // 20 = 2^2*5 lies in S
    auto R = zmod(12);
    CHECK(disjoint_from(ideal_generate(R, {{R, 2}}), mset_trivial(R)));
}

TEST_CASE("z mset membership and residues") {
    auto Z = Ring::integers();
    auto S3 = MultiplicativeSet::z_complement_of_prime(Z, 3);
    CHECK(S3.contains(1));
    CHECK(S3.contains(-2));
    CHECK(!S3.contains(0));
    CHECK(!S3.contains(9));
    auto att = S3.attainable_residues(6);
    // residues not divisible by 3
    std::vector<Int> rs;
    for (auto& [r, w] : att) {
        rs.push_back(r);
        CHECK(S3.contains(w));
        CHECK(mod_nonneg(w, 6) == r);
    }
    CHECK(rs == std::vector<Int>{1, 2, 4, 5});

    auto T = MultiplicativeSet::z_prime_set(Z, {2}, false);
    CHECK(T.contains(8));
    CHECK(!T.contains(-8));
    CHECK(!T.contains(6));
    auto att2 = T.attainable_residues(12);
    std::vector<Int> rs2;
    for (auto& [r, w] : att2) {
        rs2.push_back(r);
        CHECK(T.contains(w));
        CHECK(mod_nonneg(w, 12) == r);
    }
    // powers of two mod 12: 1, 2, 4, 8
    CHECK(rs2 == std::vector<Int>{1, 2, 4, 8});
}

TEST_CASE("rad(I cap J) = rad(I) cap rad(J) across small rings") {
    for (const char* spec : {R"({"kind":"zmod","n":36})", R"({"kind":"zmod","n":60})",
                             R"({"kind":"product","factors":[{"kind":"zmod","n":4},
                                                             {"kind":"zmod","n":9}]})"}) {
        auto R = construct_ring(json::parse(spec));
        auto ideals = enumerate_ideals(R);
        for (auto& I : ideals)
            for (auto& J : ideals)
                CHECK(radical(ideal_intersect(I, J)) ==
                      ideal_intersect(radical(I), radical(J)));
    }
}

TEST_CASE("integer ops agree with their images in zmod(n*m)") {
    std::mt19937 rng(20260808);
    auto Z = Ring::integers();
    for (int trial = 0; trial < 40; ++trial) {
        int L = 2 + int(rng() % 59);
        auto R = zmod(L);
        // pick divisors of L so the integer ideals map exactly onto ideals of zmod(L)
        std::vector<int> divs;
        for (int d = 1; d <= L; ++d)
            if (L % d == 0) divs.push_back(d);
        int a = divs[rng() % divs.size()];
        int b = divs[rng() % divs.size()];
        auto img = [&](Int n) {
            return ideal_generate(R, {{R, int(n % L)}});
        };
        Ideal A = Ideal::z_ideal(Z, a), B = Ideal::z_ideal(Z, b);
        CHECK(img(ideal_sum(A, B).zgen()) == ideal_sum(img(a), img(b)));
        CHECK(img(ideal_intersect(A, B).zgen()) == ideal_intersect(img(a), img(b)));
        CHECK(img(ideal_product(A, B).zgen()) == ideal_product(img(a), img(b)));
        CHECK(img(radical(A).zgen()) == radical(img(a)));
        int s = 1 + int(rng() % (L - 1));
        CHECK(img(ideal_colon(A, {Z, s}).zgen()) == ideal_colon(img(a), {R, s}));
        // saturation at Z \ pZ for p | L maps onto saturation at the residue set
        int p = int(factorize(L).front().first);
        auto SZ = MultiplicativeSet::z_complement_of_prime(Z, p);
        ElemSet sres(L);
        for (int r = 0; r < L; ++r)
            if (r % p != 0) sres.set(r);
        auto SR = MultiplicativeSet::from_closed_set(R, std::move(sres));
        CHECK(img(saturation(A, SZ).zgen()) == saturation(img(a), SR));
    }
}
