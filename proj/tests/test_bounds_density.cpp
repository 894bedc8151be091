#include "doctest.h"

#include "dyngal/bounds.hpp"
#include "dyngal/density.hpp"
#include "dyngal/dynatomic.hpp"
#include "dyngal/genus.hpp"
#include "oracles.hpp"

using namespace dyngal;

TEST_CASE("theta and lambda sets") {
    WreathParams p56(5, 6);
    CHECK(theta_set(p56).size() == 24); // r(n-1)
    CHECK(lambda_set(p56).size() == 75);
    WreathParams p7(7, 18);
    CHECK(theta_set(p7).size() == 108);
    CHECK(lambda_set(p7).size() == 1071);
    WreathParams p69(6, 9);
    CHECK(theta_subset(p69, 3).size() == 9); // gcd(6,s)=3 forces s=3
    CHECK(theta_subset(p69, 2).size() == 18);
    CHECK(theta_subset(p69, 1).size() == 18);
    CHECK(psi_set(p69).size() == 36);
    // all elements distinct (deduplication never removes anything)
    for (auto& p : {p56, p69}) {
        auto th = theta_set(p);
        std::set<WreathElement> th_set(th.begin(), th.end());
        CHECK(th_set.size() == th.size());
        auto la = lambda_set(p);
        std::set<WreathElement> la_set(la.begin(), la.end());
        CHECK(la_set.size() == la.size());
    }
}

TEST_CASE("unramified place counts") {
    WreathParams p56(5, 6);
    GeneratedGroup W = wreath_group(p56);
    // H = W: formula collapses to 1 for any admissible gamma
    CHECK(unramified_count(W, rho(1, p56), p56) == 1);
    CHECK(unramified_count(W, tau(1, 2, p56), p56) == 1);
    // sum kernel contains no rho_i
    GeneratedGroup ker = group_of(build_sum_kernel(5, 6, 5, false), p56);
    CHECK(unramified_count(ker, rho(1, p56), p56) == 0);
    // A6 pullback contains all rho_i^s: |C| * 6 / |H| = 2, matching the two
    // fixed cosets of the rho action on the index-2 coset space
    GeneratedGroup a6 = group_of(build_pullback(5, 6, "a6", alternating_gens(6)), p56);
    CHECK(unramified_count(a6, rho(1, p56), p56) == 2);
}

TEST_CASE("excess lower bound kernel") {
    CHECK(excess_lower_bound(Rational(4), BigInt(10)) == 3);   // 10 - floor(14/2)
    CHECK(excess_lower_bound(Rational(10), BigInt(10)) == 0);  // degenerate
    CHECK(excess_lower_bound(make_rational(7, 2), BigInt(9)) == 3);
}

TEST_CASE("u and g' arithmetic") {
    // u_nd(W, d) >= 1 for every divisor: the single place below is unramified
    for (int n : {5, 7}) {
        WreathParams p = dynatomic_params(n);
        GeneratedGroup W = wreath_group(p);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            CHECK(u_nd(W, d, p) >= 1);
        }
    }
    {
        WreathParams p = dynatomic_params(6);
        GeneratedGroup W = wreath_group(p);
        CHECK_THROWS_AS(u_nd(W, 6, p, false), UnsupportedN);
        CHECK(u_nd(W, 6, p, true) >= 1);
    }
    // sum kernel at n=7: u_{7,1} = 0 and u_{7,7} = 7 (hand computation)
    {
        WreathParams p = dynatomic_params(7);
        GeneratedGroup ker = group_of(build_sum_kernel(7, 18, 7, false), p);
        CHECK(u_nd(ker, 1, p) == 0);
        CHECK(u_nd(ker, 7, p) == 7);
        CHECK(g_prime(ker, 1, p) == 24); // 6 * (7 - floor(7/2))
        CHECK(g_prime(ker, 7, p) == 0);
    }
}

TEST_CASE("intersection counts stable across BSGS regeneration") {
    WreathParams p56(5, 6);
    SubgroupSpec ker = build_sum_kernel(5, 6, 5, false);
    auto count_in = [&](const GeneratedGroup& H, const std::vector<WreathElement>& set) {
        long c = 0;
        for (const auto& w : set)
            if (H.contains(to_perm(w, p56))) ++c;
        return c;
    };
    auto theta = theta_set(p56);
    auto lambda = lambda_set(p56);
    GeneratedGroup h1 = group_of(ker, p56);
    GeneratedGroup h2 = group_of(ker, p56);
    CHECK(count_in(h1, theta) == count_in(h2, theta));
    CHECK(count_in(h1, lambda) == count_in(h2, lambda));
    CHECK(count_in(h1, lambda) == 75); // all tau conjugates have zero twist sum
}

TEST_CASE("n=7 lower bounds") {
    Catalog cat = bundled_catalog(7);
    auto reports = bound_survey(cat);
    REQUIRE(reports.size() == 16);
    BigInt minb = reports.front().lower_bound;
    std::string argmin = reports.front().subgroup_id;
    for (const auto& r : reports)
        if (r.lower_bound < minb) {
            minb = r.lower_bound;
            argmin = r.subgroup_id;
        }
    CHECK(minb == 6);
    CHECK(argmin == "sum_kernel_q7");
    // the alternating pullback bound, computable by hand: ceil(1-2+57/2)
    for (const auto& r : reports)
        if (r.subgroup_id == "pullback_A18") CHECK(r.lower_bound == 28);
}

TEST_CASE("derangement-like counts") {
    CHECK(derangement_like(6, 6) == 1);
    CHECK(derangement_like(6, 0) == 265);
    CHECK(derangement_like(6, 1) == 264);
    // brute-force oracle over all of S6
    {
        std::vector<int> counts(7, 0);
        std::vector<int> img{0, 1, 2, 3, 4, 5};
        do {
            int fixed = 0;
            for (int i = 0; i < 6; ++i)
                if (img[i] == i) ++fixed;
            ++counts[fixed];
        } while (std::next_permutation(img.begin(), img.end()));
        for (int i = 0; i <= 6; ++i)
            CHECK(derangement_like(6, i) == BigInt(counts[i]));
    }
    for (int r = 1; r <= 10; ++r) {
        BigInt sum = 0;
        for (int i = 0; i <= r; ++i) sum += derangement_like(r, i);
        CHECK(sum == factorial(r));
    }
}

TEST_CASE("fixed point free counts") {
    CHECK(fixed_point_free_count(5, 6) == BigInt("9210721"));
    CHECK(fixed_point_free_count(6, 9) == BigInt("3095578863701"));
    CHECK(fixed_point_free_count(1, 1) == 0);
    // enumeration agreement on every small wreath group
    for (auto [n, r] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {2, 4}, {5, 2}, {4, 3}}) {
        WreathParams p(n, r);
        GeneratedGroup W = wreath_group(p);
        BigInt fpf = 0;
        W.enumerate_elements(BigInt(1000000), [&](const Permutation& g) {
            if (count_fixed_points(g) == 0) ++fpf;
        });
        CHECK(fpf == fixed_point_free_count(n, r));
    }
}

TEST_CASE("exact densities") {
    auto d5 = density_T(5);
    CHECK(d5.density == make_rational(BigInt("9210721"), BigInt("11250000")));
    CHECK(d5.decimal == "0.8187");
    CHECK(density_T(6).decimal == "0.8465");
    CHECK(density_T(7).decimal == "0.8669");
    CHECK(density_T(9).decimal == "0.8948");
    // denominators n^r r!
    for (int n : {5, 6, 7}) {
        WreathParams p = dynatomic_params(n);
        CHECK(density_T(n).group_order == pow_bigint(BigInt(n), p.r) * factorial(p.r));
    }
}

TEST_CASE("density from enumeration") {
    GeneratedGroup trivial(1, {});
    CHECK(density_from_group(trivial, BigInt(10)) == 1);
    GeneratedGroup c2(2, {parse_permutation("(1,2)", 2)});
    CHECK(density_from_group(c2, BigInt(10)) == make_rational(1, 2));
    WreathParams p32(3, 2);
    GeneratedGroup W32 = wreath_group(p32);
    Rational expect = 1 - make_rational(fixed_point_free_count(3, 2), 18);
    CHECK(density_from_group(W32, BigInt(100)) == expect);
    CHECK_THROWS_AS(density_from_group(W32, BigInt(5)), BudgetExceeded);
}

TEST_CASE("lower bounds never exceed exact genera") {
    // n=5 catalog, exact route vs bound route
    Catalog cat = bundled_catalog(5);
    WreathParams p = dynatomic_params(5);
    InertiaSystem sys = inertia_system(5);
    for (const auto& spec : cat.specs) {
        GenusReport exact = genus_of(spec, sys);
        BoundReport bound = genus_lower_bound(spec, p);
        CHECK(bound.lower_bound <= exact.genus);
    }
}
