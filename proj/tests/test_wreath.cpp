#include "doctest.h"

#include <random>

#include "dyngal/wreath.hpp"
#include "oracles.hpp"

using namespace dyngal;

namespace {

WreathElement random_element(const WreathParams& p, std::mt19937& rng) {
    std::vector<int> f(p.r), img(p.r);
    for (int i = 0; i < p.r; ++i) {
        f[i] = static_cast<int>(rng() % p.n);
        img[i] = i;
    }
    std::shuffle(img.begin(), img.end(), rng);
    return WreathElement{std::move(f), Permutation::unchecked(std::move(img))};
}

} // namespace

TEST_CASE("sigma and to_perm basics") {
    WreathParams p22(2, 2);
    CHECK(to_cycle_string(sigma(p22)) == "(1,2)(3,4)");
    WreathParams p56(5, 6);
    CHECK(cycle_pattern(sigma(p56)) == CyclePattern(6, 5));
    WreathParams p13(1, 3);
    CHECK(sigma(p13).is_identity());

    CHECK(to_perm(wreath_identity(p56), p56).is_identity());
    // rho = all-ones twist with trivial pi maps to sigma itself
    WreathElement all_ones = wreath_identity(p56);
    for (int i = 0; i < 6; ++i) all_ones.f[i] = 1;
    CHECK(to_perm(all_ones, p56) == sigma(p56));
    WreathParams p32(3, 2);
    CHECK(to_cycle_string(to_perm(rho(1, p32), p32)) == "(1,2,3)");
}

TEST_CASE("from_perm inverts to_perm and rejects outsiders") {
    WreathParams p56(5, 6);
    CHECK(from_perm(sigma(p56), p56).pi.is_identity());
    WreathElement s = from_perm(sigma(p56), p56);
    for (int v : s.f) CHECK(v == 1);
    CHECK(from_perm(Permutation(p56.D), p56) == wreath_identity(p56));
    CHECK_THROWS_AS(from_perm(parse_permutation("(1,2)", p56.D), p56), NotInWreathGroup);

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        WreathElement w = random_element(p56, rng);
        CHECK(from_perm(to_perm(w, p56), p56) == w);
    }
}

TEST_CASE("to_perm is a homomorphism onto the centralizer of sigma") {
    std::mt19937 rng(11);
    for (auto [n, r] : {std::pair{5, 6}, std::pair{6, 9}, std::pair{3, 2}}) {
        WreathParams p(n, r);
        for (int t = 0; t < 30; ++t) {
            WreathElement a = random_element(p, rng), b = random_element(p, rng);
            CHECK(to_perm(wreath_mul(a, b, p), p) == compose(to_perm(a, p), to_perm(b, p)));
            CHECK(to_perm(wreath_inv(a, p), p) == inverse(to_perm(a, p)));
        }
    }
    // small cases: image set == brute-force centralizer of sigma in S_D
    for (auto [n, r] :
         {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 2}, std::pair{2, 4}}) {
        WreathParams p(n, r);
        // brute-force centralizer inside S_D
        std::vector<Permutation> sd_gens;
        {
            std::vector<int> img(p.D);
            for (int i = 0; i < p.D; ++i) img[i] = i;
            std::swap(img[0], img[1]);
            sd_gens.push_back(Permutation::unchecked(img));
            for (int i = 0; i < p.D; ++i) img[i] = (i + 1) % p.D;
            sd_gens.push_back(Permutation::unchecked(img));
        }
        auto sd = oracles::closure(sd_gens, p.D);
        auto cent = oracles::centralizer_in(sd, sigma(p));
        std::set<Permutation> image;
        // enumerate W directly: n^r * r! elements via all (f, pi)
        std::vector<Permutation> perms_r;
        {
            std::vector<int> idx(p.r);
            for (int i = 0; i < p.r; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end());
            do perms_r.push_back(Permutation(std::vector<int>(idx)));
            while (std::next_permutation(idx.begin(), idx.end()));
        }
        std::vector<int> f(p.r, 0);
        while (true) {
            for (const auto& pi : perms_r) image.insert(to_perm(WreathElement{f, pi}, p));
            int k = 0;
            while (k < p.r && ++f[k] == p.n) f[k++] = 0;
            if (k == p.r) break;
        }
        CHECK(image.size() == cent.size());
        for (const auto& c : cent) CHECK(image.count(c) == 1);
    }
}

TEST_CASE("standard elements") {
    WreathParams p56(5, 6);
    // tau(1,2): five 2-cycles
    {
        CyclePattern pat = cycle_pattern(to_perm(tau(1, 2, p56), p56));
        int twos = 0, ones = 0;
        for (int L : pat) (L == 2 ? twos : ones)++;
        CHECK(twos == 5);
        CHECK(ones == 20);
    }
    // rho(1): one 5-cycle, 25 fixed
    {
        CyclePattern pat = cycle_pattern(to_perm(rho(1, p56), p56));
        CHECK(std::count(pat.begin(), pat.end(), 5) == 1);
        CHECK(std::count(pat.begin(), pat.end(), 1) == 25);
    }
    WreathParams p69(6, 9);
    WreathElement g4 = gamma_j(4, p69);
    WreathElement expected = wreath_pow(rho(1, p69), 3, p69);
    for (auto [i, j] : {std::pair{2, 3}, std::pair{4, 5}, std::pair{6, 7}, std::pair{8, 9}})
        expected = wreath_mul(expected, tau(i, j, p69), p69);
    CHECK(g4 == expected);
    CHECK_THROWS_AS(gamma_j(0, WreathParams(5, 6)), InvalidParameters);
    CHECK_THROWS_AS(tau(1, 1, p56), IndexOutOfRange);
    CHECK_THROWS_AS(rho(7, p56), IndexOutOfRange);
}

TEST_CASE("types, conjugacy, centralizer orders") {
    WreathParams p56(5, 6);
    // identity: t[0,1] = 6
    CHECK(type_of(wreath_identity(p56), p56) == WreathType{{{0, 1}, 6}});
    // rho1: t[1,1]=1, t[0,1]=5
    CHECK(type_of(rho(1, p56), p56) == WreathType{{{0, 1}, 5}, {{1, 1}, 1}});
    // tau12 tau34 tau56: t[0,2]=3
    WreathElement a = wreath_mul(wreath_mul(tau(1, 2, p56), tau(3, 4, p56), p56), tau(5, 6, p56), p56);
    CHECK(type_of(a, p56) == WreathType{{{0, 2}, 3}});

    CHECK(is_conjugate(rho(1, p56), rho(3, p56), p56));
    CHECK_FALSE(is_conjugate(rho(1, p56), wreath_pow(rho(1, p56), 2, p56), p56));

    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        WreathElement w = random_element(p56, rng), s = random_element(p56, rng);
        WreathElement conj = wreath_mul(wreath_mul(wreath_inv(s, p56), w, p56), s, p56);
        CHECK(is_conjugate(w, conj, p56));
    }

    CHECK(centralizer_order(type_of(wreath_identity(p56), p56), p56) == 11250000);
    CHECK(centralizer_order(type_of(tau(1, 2, p56), p56), p56) == 150000);
    CHECK(centralizer_order(type_of(rho(1, p56), p56), p56) == 1875000);
}

TEST_CASE("brute-force type equivalences on small wreath groups") {
    // centralizer orders and conjugacy agree with exhaustive search
    for (auto [n, r] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
        WreathParams p(n, r);
        GeneratedGroup W = wreath_group(p);
        auto elems = W.elements(BigInt(5000));
        std::set<Permutation> group(elems.begin(), elems.end());
        std::vector<WreathElement> welems;
        for (const auto& g : elems) welems.push_back(from_perm(g, p));

        for (size_t i = 0; i < welems.size(); ++i) {
            auto cent = oracles::centralizer_in(group, elems[i]);
            CHECK(centralizer_order(type_of(welems[i], p), p) ==
                  BigInt(static_cast<unsigned long>(cent.size())));
        }
        // conjugacy agrees with brute-force search on all pairs
        for (size_t i = 0; i < welems.size(); ++i)
            for (size_t j = i; j < welems.size(); ++j)
                CHECK(is_conjugate(welems[i], welems[j], p) ==
                      oracles::conjugate_in(group, elems[i], elems[j]));
    }
}

TEST_CASE("classification") {
    WreathParams p56(5, 6);
    WreathElement a = wreath_mul(wreath_mul(tau(1, 2, p56), tau(3, 4, p56), p56), tau(5, 6, p56), p56);
    CHECK(classify(a, p56).tag == WreathCase::Case1a);

    WreathParams p69(6, 9);
    WreathElement b0 = wreath_pow(wreath_mul(rho(1, p69), rho(2, p69), p69), 3, p69);
    auto c2a = classify(b0, p69);
    CHECK(c2a.tag == WreathCase::Case2a);
    CHECK(c2a.i == 1);
    CHECK(c2a.j == 2);

    auto c3 = classify(wreath_pow(rho(1, p56), 2, p56), p56);
    CHECK(c3.tag == WreathCase::Case3);
    CHECK(c3.i == 1);
    CHECK(c3.s == 2);

    auto c2b = classify(tau(1, 2, p56), p56);
    CHECK(c2b.tag == WreathCase::Case2b);

    CHECK(classify(gamma_j(4, p69), p69).tag == WreathCase::Case1b);
    CHECK(classify(wreath_identity(p56), p56).tag == WreathCase::Other);
}

TEST_CASE("induced cycle pattern equals actual pattern") {
    WreathParams p56(5, 6);
    CHECK(induced_cycle_pattern(type_of(wreath_identity(p56), p56), p56) == CyclePattern(30, 1));
    std::mt19937 rng(99);
    for (auto [n, r] : {std::pair{5, 6}, std::pair{6, 9}}) {
        WreathParams p(n, r);
        for (int t = 0; t < 200; ++t) {
            WreathElement w = random_element(p, rng);
            CHECK(induced_cycle_pattern(type_of(w, p), p) == cycle_pattern(to_perm(w, p)));
        }
    }
}

TEST_CASE("wreath element literals round-trip") {
    WreathParams p69(6, 9);
    std::string lit = "[3,0,0,0,0,0,0,0,0];(2,3)(4,5)(6,7)(8,9)";
    WreathElement w = parse_wreath_element(lit, p69);
    CHECK(to_literal(w) == lit);
    CHECK(w.f[0] == 3);
    CHECK_THROWS_AS(parse_wreath_element("[1,2];(1,2)", p69), ParseError);
    CHECK_THROWS_AS(parse_wreath_element("[9,0,0,0,0,0,0,0,0];()", p69), ParseError);
    // identity pi
    WreathElement id9 = parse_wreath_element("[0,0,0,0,0,0,0,0,0];()", p69);
    CHECK(id9 == wreath_identity(p69));
}
