// Exponent engine: exact rational reproduction of every closed-form value.
#include <catch2/catch_amalgamated.hpp>

#include "kinavg/exponents.hpp"

using namespace kinavg;

namespace {

Integrability fin(long long n, long long d = 1) { return Integrability::finite(Rat(n, d)); }

ExponentInput all_two(int n, Rat alpha) {
    ExponentInput in;
    in.n = n;
    in.alpha = alpha;
    in.gamma = Integrability::infinity();
    in.p1 = in.p2 = in.q1 = in.q2 = fin(2);
    return in;
}

}  // namespace

TEST_CASE("rational arithmetic basics", "[rational]") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, -2) == Rat(1, 2));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat::parse("-3/9") == Rat(-1, 3));
    CHECK_THROWS_AS(Rat(1, 0), ConfigError);

    const Integrability inf = Integrability::infinity();
    CHECK(inf.inv() == Rat(0));
    CHECK(inf.dual().value() == Rat(1));           // infinity' = 1
    CHECK(fin(3, 2).dual().value() == Rat(3));     // (3/2)' = 3
    CHECK(Integrability::parse("inf").is_infinite());
}

TEST_CASE("main exponent formula: flat L2 case", "[exponents]") {
    const auto rep = compute_exponents(all_two(1, Rat(0)));
    CHECK(rep.ell == Rat(1));
    CHECK(rep.d1 == Rat(0));
    CHECK(rep.d2 == Rat(0));
    CHECK(rep.d3 == Rat(0));
    CHECK(rep.d4 == Rat(0));
    CHECK(rep.theta == Rat(1));
    CHECK(rep.s1 == Rat(1));
    CHECK(rep.S == Rat(1, 2));
    CHECK(rep.weight_exponent == Rat(1));
    CHECK_FALSE(rep.no_gain);
}

TEST_CASE("main exponent formula: S = 1/(2(alpha+1)) for dual L2 data", "[exponents]") {
    for (const Rat alpha : {Rat(0), Rat(1, 2), Rat(1), Rat(2)}) {
        const auto rep = compute_exponents(all_two(1, alpha));
        CHECK(rep.S == Rat(1) / (Rat(2) * (alpha + Rat(1))));
    }
    // alpha = 1 in the statement
    CHECK(compute_exponents(all_two(1, Rat(1))).S == Rat(1, 4));
}

TEST_CASE("main exponent formula: all-ones input has no gain", "[exponents]") {
    ExponentInput in;
    in.n = 1;
    in.alpha = Rat(0);
    in.gamma = Integrability::infinity();
    in.p1 = in.p2 = in.q1 = in.q2 = fin(1);
    const auto rep = compute_exponents(in);
    CHECK(rep.d1 == Rat(1));
    CHECK(rep.d2 == Rat(1));
    CHECK(rep.d3 == Rat(1));
    CHECK(rep.d4 == Rat(1));
    CHECK(rep.theta == Rat(1));
    CHECK(rep.S == Rat(-1, 2));
    CHECK(rep.no_gain);
}

TEST_CASE("gamma -> infinity limit matches the d3/d4 shapes", "[exponents]") {
    ExponentInput in = all_two(2, Rat(0));
    in.p2 = fin(3);
    in.q2 = fin(5, 2);
    const auto rep = compute_exponents(in);
    CHECK(rep.ell == Rat(1));
    CHECK(rep.d1 == Rat::max(Rat(2) * (Rat(1, 3) + Rat(2, 5) - Rat(1)), Rat(0)));
    CHECK(rep.d2 == Rat::max(Rat(2) * (Rat(2, 3) - Rat(1)), Rat(0)));
}

TEST_CASE("gamma < 2 branch uses the alternate S formula", "[exponents]") {
    ExponentInput in = all_two(1, Rat(0));
    in.gamma = fin(3, 2);
    const auto rep = compute_exponents(in);
    CHECK_FALSE(rep.gamma_ge_2);
    // front = 1 - n(2/p2 + 2/gamma - 1) = 1 - (1 + 4/3 - 1) = -1/3; theta = 1
    CHECK(rep.theta == Rat(1));
    CHECK(rep.S == Rat(1, 2) * (Rat(-1, 3) * Rat(1) - Rat(0)));
    CHECK(rep.no_gain);
}

TEST_CASE("monotonicity: S nondecreasing in p2, nonincreasing in alpha", "[exponents][property]") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        ExponentInput in;
        in.n = 1 + static_cast<int>(rng.next() % 3);
        in.alpha = Rat(static_cast<long long>(rng.next() % 5), 1 + static_cast<long long>(rng.next() % 3));
        in.gamma = (rng.next() % 2) ? Integrability::infinity()
                                    : fin(2 + static_cast<long long>(rng.next() % 6));
        auto rand_int = [&] {
            const long long den = 1 + static_cast<long long>(rng.next() % 3);
            const long long num = den + static_cast<long long>(rng.next() % (7 * den));
            return fin(num, den);  // p in [1, 8)
        };
        in.p1 = rand_int();
        in.q1 = rand_int();
        in.q2 = rand_int();

        // increasing p2 (u decreasing) never decreases S
        Rat prev_S;
        bool first = true;
        for (const long long p2num : {1LL, 2LL, 3LL, 5LL, 9LL}) {
            in.p2 = fin(p2num);
            const auto rep = compute_exponents(in);
            if (!first) CHECK(rep.S >= prev_S);
            prev_S = rep.S;
            first = false;
        }
        in.p2 = Integrability::infinity();
        CHECK(compute_exponents(in).S >= prev_S);

        // increasing alpha never increases S
        in.p2 = fin(2);
        const auto rep_a0 = compute_exponents(in);
        in.alpha = in.alpha + Rat(1, 2);
        CHECK(compute_exponents(in).S <= rep_a0.S);

        // gamma < 2 branch: p2 monotonicity
        in.gamma = fin(2 + static_cast<long long>(rng.next() % 2), 2);  // 1 or 3/2
        if (in.gamma.inv() > Rat(1, 2)) {
            Rat prev;
            bool first2 = true;
            for (const long long p2num : {1LL, 2LL, 4LL, 8LL}) {
                in.p2 = fin(p2num);
                const auto rep = compute_exponents(in);
                if (!first2) CHECK(rep.S >= prev);
                prev = rep.S;
                first2 = false;
            }
        }
    }
}

TEST_CASE("DiPerna-Lions exponents", "[exponents]") {
    SECTION("p = q = 2") {
        for (const Rat alpha : {Rat(0), Rat(1, 3), Rat(2)}) {
            const auto dl = diperna_lions_exponent(fin(2), fin(2), alpha);
            CHECK(dl.s == Rat(1) / (Rat(2) * (Rat(1) + alpha)));
        }
    }
    SECTION("p = q = 3/2: s = 1/3 = 1/p'") {
        const auto dl = diperna_lions_exponent(fin(3, 2), fin(3, 2), Rat(0));
        CHECK(dl.s == Rat(1, 3));
    }
    SECTION("p = q = 3: s = 1/3, t = 3") {
        const auto dl = diperna_lions_exponent(fin(3), fin(3), Rat(0));
        CHECK(dl.s == Rat(1, 3));
        CHECK(dl.t.value() == Rat(3));
    }
    SECTION("agrees with compute_exponents on dual L2 data for rational alpha") {
        for (int k = 0; k <= 8; ++k) {
            const Rat alpha(k, 3);
            const auto dl = diperna_lions_exponent(fin(2), fin(2), alpha);
            CHECK(dl.s == compute_exponents(all_two(1, alpha)).S);
        }
    }
    SECTION("rejects endpoints") {
        CHECK_THROWS_AS(diperna_lions_exponent(fin(1), fin(2), Rat(0)), ConfigError);
        CHECK_THROWS_AS(diperna_lions_exponent(fin(2), Integrability::infinity(), Rat(0)),
                        ConfigError);
    }
}

TEST_CASE("Westdickenberg exponents", "[exponents]") {
    SECTION("n = 1, p2 = q2 = 2: S = 1/2") {
        const auto w = westdickenberg_exponent(fin(3, 2), fin(2), fin(2), 1);
        CHECK(w.S == Rat(1, 2));
        CHECK_FALSE(w.P_infinite);
    }
    SECTION("n = 2: S = -1/2 = 3/2 - n") {
        const auto w = westdickenberg_exponent(fin(4, 3), fin(2), fin(2), 2);
        CHECK(w.S == Rat(-1, 2));
    }
    SECTION("p at the n/(n-1) endpoint flags P = infinity") {
        const auto w = westdickenberg_exponent(fin(2), fin(2), fin(2), 2);
        CHECK(w.P_infinite);
    }
    SECTION("out of range p rejected") {
        CHECK_THROWS_AS(westdickenberg_exponent(fin(3), fin(2), fin(2), 2), ConfigError);
        CHECK_THROWS_AS(westdickenberg_exponent(fin(1), fin(2), fin(2), 2), ConfigError);
    }
}

TEST_CASE("Arsenio exponents", "[exponents]") {
    CHECK(arsenio_exponent(fin(2), 5) == Rat(1, 2));
    CHECK(arsenio_exponent(fin(4, 3), 1) == Rat(1, 2));
    CHECK(arsenio_exponent(fin(3, 2), 3) == Rat(5, 12));
    CHECK_THROWS_AS(arsenio_exponent(fin(5, 4), 3), ConfigError);
    CHECK_THROWS_AS(arsenio_exponent(fin(3), 3), ConfigError);
}

TEST_CASE("Besov embedding and interpolation rules", "[exponents]") {
    SECTION("embedding p < 2 into L2 scale") {
        // stilde = 1/(p'(1+alpha)) + n(1/2 - 1/p)
        const Rat alpha(0);
        const Integrability p = fin(3, 2);
        const Rat s = Rat(1) / (p.dual().value() * (Rat(1) + alpha));
        const Rat st = besov_embed(s, p, fin(2), 1);
        CHECK(st == s + Rat(1) * (Rat(1, 2) - Rat(2, 3)));
    }
    SECTION("identity embedding") { CHECK(besov_embed(Rat(1, 3), fin(4), fin(4), 2) == Rat(1, 3)); }
    SECTION("wrong direction rejected") {
        CHECK_THROWS_AS(besov_embed(Rat(1, 2), fin(3), fin(2), 1), ConfigError);
    }
    SECTION("interpolation endpoints and midpoint") {
        const auto end = interpolate({Rat(1), fin(2)}, {Rat(0), fin(4)}, Rat(1));
        CHECK(end.first == Rat(1));
        CHECK(end.second.value() == Rat(2));
        const auto mid = interpolate({Rat(1), fin(2)}, {Rat(0), fin(2)}, Rat(1, 2));
        CHECK(mid.first == Rat(1, 2));
        CHECK(mid.second.value() == Rat(2));
    }
}

TEST_CASE("theorem comparison verdicts", "[exponents][compare]") {
    SECTION("p = q = 2: same regularity") {
        const auto rep = compare_theorems(all_two(1, Rat(0)));
        REQUIRE(rep.entries[0].theorem == "diperna_lions");
        CHECK(rep.entries[0].verdict == Verdict::Equal);
    }

    SECTION("p = q in (1,2): DiPerna-Lions implies the main result") {
        ExponentInput in = all_two(1, Rat(0));
        in.p1 = in.p2 = fin(3, 2);
        in.q1 = in.q2 = fin(3, 2);
        const auto rep = compare_theorems(in);
        CHECK(rep.entries[0].verdict == Verdict::ImpliedBy);
        CHECK(rep.entries[0].rule.rule == "embedding");
    }

    SECTION("p = q > 2 at n=1, alpha=0: equality after embedding") {
        ExponentInput in = all_two(1, Rat(0));
        in.p1 = in.p2 = fin(3);
        in.q1 = in.q2 = fin(3);
        const auto rep = compare_theorems(in);
        CHECK(rep.entries[0].verdict == Verdict::Implies);
        REQUIRE(rep.entries[0].rule.stilde.has_value());
        CHECK(*rep.entries[0].rule.stilde == Rat(1, 3));  // equality with the DL exponent
    }

    SECTION("p = q > 2 at n=2: incomparable (more smoothness, less integrability)") {
        ExponentInput in = all_two(2, Rat(0));
        in.p1 = in.p2 = fin(3);
        in.q1 = in.q2 = fin(3);
        const auto rep = compare_theorems(in);
        CHECK(rep.entries[0].verdict == Verdict::Incomparable);
    }

    SECTION("dual pairing, alpha < 1/n and 2 < p < 2n/(n(1+alpha)-1): implies by embedding") {
        ExponentInput in;
        in.n = 2;
        in.alpha = Rat(1, 4);  // < 1/2 = 1/n
        in.gamma = Integrability::infinity();
        in.p1 = in.p2 = fin(5, 2);  // 2 < 5/2 < 2n/(n(1+alpha)-1) = 4/(3/2) = 8/3
        in.q1 = in.q2 = fin(5, 2).dual();
        const auto rep = compare_theorems(in);
        CHECK(rep.entries[0].verdict == Verdict::Implies);
        CHECK(rep.entries[0].rule.rule == "embedding");
    }

    SECTION("dual pairing, alpha = 0: implies by interpolation when embedding fails") {
        ExponentInput in;
        in.n = 3;
        in.alpha = Rat(0);
        in.gamma = Integrability::infinity();
        in.p1 = in.p2 = fin(4);  // p=4 > 2n/(n-1)=3: embedding fails, interpolation closes
        in.q1 = in.q2 = fin(4).dual();
        const auto rep = compare_theorems(in);
        CHECK(rep.entries[0].verdict == Verdict::Implies);
        CHECK(rep.entries[0].rule.rule == "interpolation");
    }

    SECTION("Westdickenberg n=1, p=2: identical spaces") {
        ExponentInput in = all_two(1, Rat(0));
        const auto rep = compare_theorems(in);
        REQUIRE(rep.entries[1].theorem == "westdickenberg");
        CHECK(rep.entries[1].verdict == Verdict::Equal);
    }

    SECTION("Westdickenberg n>=2: main result implies it with stilde = 3/2 - n") {
        for (int n : {2, 3}) {
            ExponentInput in = all_two(n, Rat(0));
            in.p1 = fin(2 * n, 2 * n - 1);  // 1 < p < n/(n-1)
            in.q1 = in.p1;
            const auto rep = compare_theorems(in);
            REQUIRE(rep.entries[1].applicable);
            CHECK(rep.entries[1].verdict == Verdict::Implies);
            REQUIRE(rep.entries[1].rule.stilde.has_value());
            CHECK(*rep.entries[1].rule.stilde == Rat(3, 2) - Rat(n));
        }
    }

    SECTION("Arsenio n <= 2: implied by; n >= 3: implication fails") {
        for (int n : {1, 2}) {
            ExponentInput in = all_two(n, Rat(0));
            in.p1 = in.q1 = fin(3, 2);
            const auto rep = compare_theorems(in);
            REQUIRE(rep.entries[2].theorem == "arsenio");
            REQUIRE(rep.entries[2].applicable);
            CHECK(rep.entries[2].verdict == Verdict::ImpliedBy);
        }
        for (int n : {3, 4, 5}) {
            ExponentInput in = all_two(n, Rat(0));
            in.p1 = in.q1 = fin(3, 2);
            const auto rep = compare_theorems(in);
            REQUIRE(rep.entries[2].applicable);
            CHECK(rep.entries[2].verdict == Verdict::Incomparable);
        }
    }
}
