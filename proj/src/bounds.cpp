#include "dyngal/bounds.hpp"

#include <numeric>

#include "dyngal/dynatomic.hpp"
#include "dyngal/errors.hpp"

namespace dyngal {

std::vector<WreathElement> theta_set(const WreathParams& params) {
    std::vector<WreathElement> out;
    for (int i = 1; i <= params.r; ++i)
        for (int s = 1; s < params.n; ++s) out.push_back(wreath_pow(rho(i, params), s, params));
    return out;
}

std::vector<WreathElement> theta_subset(const WreathParams& params, int d) {
    if (params.n % d != 0) throw NotADivisor("d must divide n");
    std::vector<WreathElement> out;
    for (int i = 1; i <= params.r; ++i)
        for (int s = 1; s < params.n; ++s)
            if (std::gcd(params.n, s) == d) out.push_back(wreath_pow(rho(i, params), s, params));
    return out;
}

std::vector<WreathElement> lambda_set(const WreathParams& params) {
    std::vector<WreathElement> out;
    for (int i = 1; i <= params.r; ++i)
        for (int j = i + 1; j <= params.r; ++j)
            for (int s = 0; s < params.n; ++s) {
                WreathElement rs = wreath_pow(rho(i, params), s, params);
                out.push_back(wreath_mul(wreath_mul(wreath_inv(rs, params), tau(i, j, params), params),
                                         rs, params));
            }
    return out;
}

std::vector<WreathElement> psi_set(const WreathParams& params) {
    if (params.n % 2 != 0) throw InvalidParameters("Psi_n needs even n");
    std::vector<WreathElement> out;
    for (int i = 1; i <= params.r; ++i)
        for (int j = i + 1; j <= params.r; ++j)
            out.push_back(wreath_pow(wreath_mul(rho(i, params), rho(j, params), params),
                                     params.n / 2, params));
    return out;
}

namespace {

long count_members(const GeneratedGroup& H, const std::vector<WreathElement>& set,
                   const WreathParams& params) {
    long count = 0;
    for (const auto& w : set)
        if (H.contains(to_perm(w, params))) ++count;
    return count;
}

} // namespace

Rational unramified_count(const GeneratedGroup& H, const WreathElement& gamma,
                          const WreathParams& params) {
    Classification cls = classify(gamma, params);
    std::vector<WreathElement> conj_class;
    switch (cls.tag) {
        case WreathCase::Case3: {
            for (int i = 1; i <= params.r; ++i)
                conj_class.push_back(wreath_pow(rho(i, params), cls.s, params));
            break;
        }
        case WreathCase::Case2b:
            conj_class = lambda_set(params);
            break;
        case WreathCase::Case2a:
            conj_class = psi_set(params);
            break;
        default:
            throw InvalidParameters("unsupported conjugacy family for unramified_count");
    }
    BigInt cent = centralizer_order(type_of(gamma, params), params);
    long s = count_members(H, conj_class, params);
    Rational value = Rational(cent * s) / Rational(H.order());
    value.canonicalize();
    if (value.get_den() != 1) throw NonIntegralCount("unramified place count not integral");
    return value;
}

Rational u_nd(const GeneratedGroup& H, int d, const WreathParams& params, bool experimental_even) {
    const int n = params.n, r = params.r;
    if (n % d != 0) throw NotADivisor("d must divide n");
    BigInt order_h = H.order();
    if (d < n) {
        BigInt cent = factorial(static_cast<unsigned long>(r - 1)) *
                      pow_bigint(BigInt(n), static_cast<unsigned long>(r));
        long cnt = count_members(H, theta_subset(params, d), params);
        Rational u = Rational(cent * cnt) / Rational(order_h);
        u.canonicalize();
        return u;
    }
    if (n % 2 == 0 && !experimental_even)
        throw UnsupportedN("u_{n,n} for even n requires the experimental even variant");
    BigInt cent_lambda = 2 * factorial(static_cast<unsigned long>(r - 2)) *
                         pow_bigint(BigInt(n), static_cast<unsigned long>(r - 1));
    long cnt = count_members(H, lambda_set(params), params);
    Rational u = Rational(cent_lambda * cnt) / Rational(order_h);
    if (n % 2 == 0) {
        BigInt cent_psi = 2 * factorial(static_cast<unsigned long>(r - 2)) *
                          pow_bigint(BigInt(n), static_cast<unsigned long>(r));
        long cnt_psi = count_members(H, psi_set(params), params);
        u += Rational(cent_psi * cnt_psi) / Rational(order_h);
    }
    u.canonicalize();
    return u;
}

namespace {

BigInt wreath_order(const WreathParams& params) {
    return pow_bigint(BigInt(params.n), static_cast<unsigned long>(params.r)) *
           factorial(static_cast<unsigned long>(params.r));
}

} // namespace

BigInt excess_lower_bound(const Rational& u, const BigInt& a) {
    Rational inner = (u + Rational(a)) / 2;
    return a - floor_div(inner);
}

BigInt g_prime(const GeneratedGroup& H, int d, const WreathParams& params, bool experimental_even) {
    BigInt a = wreath_order(params) / H.order();
    return BigInt(delta_degree(params.n, d)) * excess_lower_bound(u_nd(H, d, params, experimental_even), a);
}

BoundReport genus_lower_bound(const SubgroupSpec& spec, const WreathParams& params,
                              bool experimental_even) {
    GeneratedGroup H = group_of(spec, params);
    BigInt a = wreath_order(params) / H.order();
    BoundReport report;
    report.subgroup_id = spec.id;
    report.index = a;
    Rational half_sum = 0;
    for (int d = 1; d <= params.n; ++d) {
        if (params.n % d != 0) continue;
        DivisorBound entry;
        entry.d = d;
        entry.u = u_nd(H, d, params, experimental_even);
        entry.g_prime = BigInt(delta_degree(params.n, d)) * excess_lower_bound(entry.u, a);
        if (entry.g_prime > 0) half_sum += Rational(entry.g_prime) / 2;
        report.divisors.push_back(std::move(entry));
    }
    report.lower_bound = ceil_div(Rational(1) - Rational(a) + half_sum);
    return report;
}

std::vector<BoundReport> bound_survey(const Catalog& catalog, bool experimental_even) {
    WreathParams params = dynatomic_params(catalog.n);
    std::vector<BoundReport> out;
    for (const auto& spec : catalog.specs)
        out.push_back(genus_lower_bound(spec, params, experimental_even));
    return out;
}

} // namespace dyngal
