#include "dyngal/genus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dyngal/errors.hpp"

namespace dyngal {

long compute_e_n(int n) {
    if (n < 1) throw InvalidParameters("n must be positive");
    BigInt total = 0;
    int g2 = n % 2 == 0 ? 2 : 1;
    for (int d = 1; d <= g2; ++d) {
        if (g2 % d) continue;
        BigInt phi2 = BigInt(static_cast<unsigned long>(euler_phi(d))) *
                      BigInt(static_cast<unsigned long>(euler_phi(d)));
        BigInt inner = 0;
        for (int k = 1; k <= n; ++k) {
            if (n % k || k % d) continue;
            if (std::gcd(n / k, d) != 1) continue;
            int mu = mobius(static_cast<std::uint64_t>(n / k));
            if (mu == 0) continue;
            BigInt term = BigInt(1) << (k / d);
            inner += mu > 0 ? term : -term;
        }
        total += phi2 * inner;
    }
    BigInt e = total / (2 * n);
    if (e * 2 * n != total) throw NonIntegralCount("e_n formula did not divide exactly");
    return mpz_get_si(e.get_mpz_t());
}

GeneratedGroup f0_stabilizer(const WreathParams& params) {
    std::vector<Permutation> gens;
    for (int i = 1; i <= params.r; ++i) gens.push_back(to_perm(rho(i, params), params));
    // stabilizer of 1 in S_r, lifted with zero twist
    if (params.r >= 3) {
        std::vector<int> img(params.r);
        for (int i = 0; i < params.r; ++i) img[i] = i;
        std::swap(img[1], img[2]);
        WreathElement w{std::vector<int>(params.r, 0), Permutation::unchecked(std::move(img))};
        gens.push_back(to_perm(w, params));
    }
    if (params.r >= 4) {
        std::vector<int> img(params.r);
        img[0] = 0;
        for (int i = 1; i < params.r; ++i) img[i] = 1 + (i % (params.r - 1));
        WreathElement w{std::vector<int>(params.r, 0), Permutation::unchecked(std::move(img))};
        gens.push_back(to_perm(w, params));
    }
    return GeneratedGroup(params.D, std::move(gens));
}

F0Context::F0Context(const WreathParams& p)
    : params(p), W(wreath_group(p)), H0(f0_stabilizer(p)), action(W, H0) {}

int s_of_p(const F0Context& ctx, const WreathElement& gamma) {
    return ramification_excess(ctx.action.induced_permutation(to_perm(gamma, ctx.params)));
}

int s_of_p(const WreathElement& gamma, const WreathParams& params) {
    F0Context ctx(params);
    return s_of_p(ctx, gamma);
}

namespace {

WreathElement select_candidate(const std::vector<WreathElement>& candidates, int target,
                               const F0Context& ctx, const std::string& what) {
    const WreathElement* found = nullptr;
    for (const auto& cand : candidates) {
        if (s_of_p(ctx, cand) == target) {
            if (found) throw AmbiguousInertia("multiple " + what + " candidates match");
            found = &cand;
        }
    }
    if (!found) throw AmbiguousInertia("no " + what + " candidate matches S(p)");
    return *found;
}

} // namespace

InertiaSystem inertia_system(int n) {
    if (n < 1 || n > 9) throw UnsupportedN("inertia systems supported for n in 1..9");
    WreathParams params = dynatomic_params(n);
    const int r = params.r;
    F0Context ctx(params);
    InertiaSystem system;
    system.n = n;

    for (const PlaceClass& pc : place_classes(n)) {
        if (pc.multiplicity == 0) continue;
        if (pc.at_infinity) {
            std::vector<WreathElement> candidates;
            if (r % 2 == 0) {
                WreathElement prod = wreath_identity(params);
                for (int i = 1; i + 1 <= r; i += 2)
                    prod = wreath_mul(prod, tau(i, i + 1, params), params);
                candidates.push_back(std::move(prod));
            }
            if (n % 2 == 0)
                for (int j = 0; 2 * j <= r - 1; ++j) candidates.push_back(gamma_j(j, params));
            system.entries.push_back(
                {pc, select_candidate(candidates, r - compute_e_n(n), ctx, "infinity")});
        } else if (pc.d == n) {
            std::vector<WreathElement> candidates;
            if (r >= 2) {
                candidates.push_back(tau(1, 2, params));
                if (n % 2 == 0)
                    candidates.push_back(wreath_pow(
                        wreath_mul(rho(1, params), rho(2, params), params), n / 2, params));
            }
            system.entries.push_back({pc, select_candidate(candidates, 1, ctx, "d=n")});
        } else {
            system.entries.push_back({pc, wreath_pow(rho(1, params), pc.d, params)});
        }
    }
    return system;
}

GenusReport genus_of(const SubgroupSpec& spec, const InertiaSystem& system, long coset_limit) {
    WreathParams params = dynatomic_params(system.n);
    GeneratedGroup W = wreath_group(params);
    GeneratedGroup H = group_of(spec, params);
    CosetAction action(W, H, coset_limit);

    GenusReport report;
    report.subgroup_id = spec.id;
    report.index = W.order() / H.order();
    long total = 0;
    for (const auto& entry : system.entries) {
        Permutation induced = action.induced_permutation(to_perm(entry.generator, params));
        long q = ramification_excess(induced);
        long contrib = q * entry.place.multiplicity;
        report.contributions.push_back({entry.place, q, contrib});
        total += contrib;
    }
    if (total % 2 != 0) throw NonIntegralGenus("odd ramification total for " + spec.id);
    BigInt genus = 1 - report.index + BigInt(total) / 2;
    if (genus < std::numeric_limits<long>::min() || genus > std::numeric_limits<long>::max())
        throw Error("genus out of range");
    report.genus = mpz_get_si(genus.get_mpz_t());
    return report;
}

std::vector<GenusReport> genus_survey(const Catalog& catalog, const InertiaSystem& system,
                                      long coset_limit) {
    std::vector<GenusReport> out;
    for (const auto& spec : catalog.specs) out.push_back(genus_of(spec, system, coset_limit));
    std::stable_sort(out.begin(), out.end(),
                     [](const GenusReport& a, const GenusReport& b) { return a.index > b.index; });
    return out;
}

} // namespace dyngal
