#include <doctest.h>

#include "sprimary/ideal.hpp"
#include "sprimary/ring.hpp"

using namespace sprimary;

namespace {

RingPtr zmod(int n) { return construct_ring(json{{"kind", "zmod"}, {"n", n}}); }

RingPtr z2xz2() {
    return construct_ring(json::parse(R"({"kind":"product","factors":[
        {"kind":"zmod","n":2},{"kind":"zmod","n":2}]})"));
}

}  // namespace

TEST_CASE("zmod construction and arithmetic") {
    auto R = zmod(12);
    CHECK(R->size() == 12);
    CHECK(R->one() == 1);
    // 5 * 5 = 25 = 1 mod 12
    CHECK(ring_mul({R, 5}, {R, 5}).v == 1);
    for (int x = 0; x < 12; ++x) CHECK(R->mul(R->one(), x) == x);
    CHECK_THROWS_AS(construct_ring(json{{"kind", "zmod"}, {"n", 1}}), ValidationError);
}

TEST_CASE("integer ring arithmetic") {
    auto Z = Ring::integers();
    CHECK(ring_pow({Z, 6}, 2).v == 36);
    CHECK(ring_add({Z, -5}, {Z, 3}).v == -2);
    CHECK_THROWS_AS(ring_pow({Z, 6}, -1), ValidationError);
    CHECK_THROWS_AS(enumerate_elements(Z), ValidationError);
}

TEST_CASE("cross-ring mixing is rejected") {
    auto A = zmod(12);
    auto B = zmod(8);
    CHECK_THROWS_AS(ring_add({A, 1}, {B, 1}), ValidationError);
}

TEST_CASE("product ring") {
    auto R = z2xz2();
    CHECK(R->size() == 4);
    auto elems = enumerate_elements(R);
    CHECK(elems.size() == 4);
    // idempotents: every element squares to itself in Z2 x Z2
    for (auto& e : elems) CHECK(ring_mul(e, e).v == e.v);
}

TEST_CASE("enumerate_elements order") {
    auto R = zmod(4);
    auto elems = enumerate_elements(R);
    REQUIRE(elems.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(elems[i].v == i);
}

TEST_CASE("nilradical against brute force") {
    auto check_nil = [](int n, std::vector<Int> expect) {
        auto R = zmod(n);
        Ideal nil = nilradical(R);
        // independent oracle: a^k = 0 for some k <= n
        std::vector<Int> brute;
        for (int a = 0; a < n; ++a) {
            long long x = a % n;
            for (int k = 1; k <= n; ++k) {
                if (x == 0) {
                    brute.push_back(a);
                    break;
                }
                x = (x * a) % n;
            }
        }
        CHECK(brute == expect);
        for (int a = 0; a < n; ++a)
            CHECK(nil.contains(a) == (std::find(brute.begin(), brute.end(), a) != brute.end()));
    };
    check_nil(12, {0, 6});
    check_nil(6, {0});
    CHECK(nilradical(Ring::integers()).zgen() == 0);
}

TEST_CASE("nilradical equals radical of the zero ideal") {
    for (int n : {4, 8, 9, 12, 18, 36, 60}) {
        auto R = zmod(n);
        CHECK(nilradical(R) == radical(zero_ideal(R)));
    }
}

TEST_CASE("poly quotient ring F_4") {
    auto R = construct_ring(json::parse(R"({"kind":"poly_quot","p":2,"f":[1,1,1],
                                            "irreducible":true})"));
    CHECK(R->size() == 4);
    // a field: every nonzero element is a unit
    CHECK(R->unit_set().count() == 3);
    // degree-1 modulus gives the prime field
    CHECK(construct_ring(json::parse(R"({"kind":"poly_quot","p":2,"f":[1,1]})"))->size() == 2);
    // non-monic modulus
    CHECK_THROWS_AS(construct_ring(json::parse(R"({"kind":"poly_quot","p":3,"f":[1,1,2]})")),
                    ValidationError);
    // x^2 reducible
    CHECK_THROWS_AS(
        construct_ring(json::parse(R"({"kind":"poly_quot","p":2,"f":[0,0,1],"irreducible":true})")),
        ValidationError);
    // F_2[x]/(x^2) is a legal non-reduced ring when irreducibility is not required
    auto R2 = construct_ring(json::parse(R"({"kind":"poly_quot","p":2,"f":[0,0,1]})"));
    CHECK(R2->size() == 4);
    CHECK(R2->nil_set().count() == 2);
}

TEST_CASE("idealization of zmod(4) by Z/2") {
    auto R = construct_ring(json::parse(R"({"kind":"idealization","base":{"kind":"zmod","n":4},
                                            "m":2,"action":[0,1,0,1]})"));
    CHECK(R->size() == 8);
    // (0|1) squares to zero: the module part is square-zero
    Int v = R->element_from_json(json::parse("[0,1]"));
    CHECK(ring_mul({R, v}, {R, v}).v == 0);
    // nilradical is Nil(base) (+) M: {0,2} x {0,1}
    CHECK(R->nil_set().count() == 4);
    // bad action: not a homomorphism
    CHECK_THROWS_AS(construct_ring(json::parse(
                        R"({"kind":"idealization","base":{"kind":"zmod","n":4},
                            "m":2,"action":[0,1,1,1]})")),
                    ValidationError);
    CHECK_THROWS_AS(construct_ring(json::parse(
                        R"({"kind":"idealization","base":{"kind":"zmod","n":4},
                            "m":1,"action":[0,0,0,0]})")),
                    ValidationError);
}

TEST_CASE("quotient ring zmod(12)/(4) matches zmod(4)") {
    auto R = zmod(12);
    Ideal I = ideal_generate(R, {{R, 4}});
    auto Q = quotient_ring(R, I);
    auto Z4 = zmod(4);
    REQUIRE(Q->size() == 4);
    for (int a = 0; a < 4; ++a) {
        CHECK(Q->neg(a) == Z4->neg(a));
        for (int b = 0; b < 4; ++b) {
            CHECK(Q->add(a, b) == Z4->add(a, b));
            CHECK(Q->mul(a, b) == Z4->mul(a, b));
        }
    }
    // |R/I| * |I| = |R|
    CHECK(Q->size() * I.elems().count() == R->size());
    // projection is the canonical surjection
    for (int x = 0; x < 12; ++x) CHECK(Q->project(x) == x % 4);
}

TEST_CASE("quotient by the zero ideal and by the whole ring") {
    auto R = zmod(6);
    auto Q = quotient_ring(R, zero_ideal(R));
    CHECK(Q->size() == 6);
    CHECK_THROWS_AS(quotient_ring(R, unit_ideal(R)), ValidationError);
    CHECK_THROWS_AS(quotient_ring(Ring::integers(), Ideal::z_ideal(Ring::integers(), 4)),
                    ValidationError);
}

TEST_CASE("quotient of a ring by its nilradical is reduced") {
    for (const char* spec :
         {R"({"kind":"zmod","n":12})", R"({"kind":"zmod","n":8})",
          R"({"kind":"idealization","base":{"kind":"zmod","n":4},"m":2,"action":[0,1,0,1]})"}) {
        auto R = construct_ring(json::parse(spec));
        auto Q = quotient_ring(R, nilradical(R));
        CHECK(Q->nil_set().count() == 1);
    }
}

TEST_CASE("localization at an idempotent-generating set") {
    auto R = zmod(6);
    auto S = mset_closure(R, {{R, 3}});
    CHECK(S.elems().to_list() == std::vector<int>{1, 3});
    auto L = localize(R, S);
    CHECK(L->size() == 2);
}

TEST_CASE("localization at {1} reproduces the ring") {
    for (const char* spec : {R"({"kind":"zmod","n":12})",
                             R"({"kind":"product","factors":[{"kind":"zmod","n":2},
                                                             {"kind":"zmod","n":3}]})"}) {
        auto R = construct_ring(json::parse(spec));
        auto L = localize(R, mset_trivial(R));
        REQUIRE(L->size() == R->size());
        for (int a = 0; a < R->size(); ++a) {
            CHECK(L->localization_image(a) == a);
            for (int b = 0; b < R->size(); ++b) {
                CHECK(L->add(a, b) == R->add(a, b));
                CHECK(L->mul(a, b) == R->mul(a, b));
            }
        }
    }
}

TEST_CASE("localization at a unit changes nothing") {
    auto R = zmod(12);
    auto S = mset_closure(R, {{R, 5}});
    auto L = localize(R, S);
    CHECK(L->size() == 12);
}

TEST_CASE("localization of Z is rejected") {
    auto Z = Ring::integers();
    CHECK_THROWS_AS(localize(Z, mset_trivial(Z)), ValidationError);
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(construct_ring(json{{"kind", "zmod"}, {"n", 100}}, 50), ValidationError);
    CHECK_THROWS_AS(construct_ring(json::parse(R"({"kind":"product","factors":[
        {"kind":"zmod","n":64},{"kind":"zmod","n":65}]})")),
                    ValidationError);
}

TEST_CASE("element payloads round-trip") {
    std::vector<std::string> specs = {
        R"({"kind":"zmod","n":12})",
        R"({"kind":"product","factors":[{"kind":"zmod","n":2},{"kind":"zmod","n":6}]})",
        R"({"kind":"poly_quot","p":2,"f":[1,1,1]})",
        R"({"kind":"idealization","base":{"kind":"zmod","n":4},"m":2,"action":[0,1,0,1]})",
        R"({"kind":"localization","base":{"kind":"zmod","n":6},"mset_gens":[3]})",
    };
    for (const auto& s : specs) {
        auto R = construct_ring(json::parse(s));
        for (int v = 0; v < R->size(); ++v) {
            json payload = R->element_to_json(v);
            CHECK(R->element_from_json(payload) == v);
        }
    }
    // quotient payloads parse through the base ring
    auto R = zmod(12);
    auto Q = quotient_ring(R, ideal_generate(R, {{R, 4}}));
    for (int v = 0; v < Q->size(); ++v)
        CHECK(Q->element_from_json(Q->element_to_json(v)) == v);
    CHECK(Q->element_from_json(json(7)) == 3);
}

TEST_CASE("ring ids are canonical per construction") {
    auto a = zmod(12);
    auto b = construct_ring(json::parse(R"({"n":12,"kind":"zmod"})"));
    CHECK(a->id() == b->id());
    CHECK(a->same_ring(*b));
}

TEST_CASE("construct rejects malformed specs") {
    CHECK_THROWS_AS(construct_ring(json::parse(R"({"kind":"frobnicate"})")), ParseError);
    CHECK_THROWS_AS(construct_ring(json::parse(R"({"no_kind":1})")), ParseError);
    CHECK_THROWS_AS(construct_ring(json::parse(R"({"kind":"product","factors":[]})")),
                    ValidationError);
}
