#include "dyngal/wreath.hpp"

#include <algorithm>
#include <numeric>

#include "dyngal/errors.hpp"

namespace dyngal {

namespace {

int mod_n(long v, int n) {
    long m = v % n;
    if (m < 0) m += n;
    return static_cast<int>(m);
}

void check_element(const WreathElement& w, const WreathParams& params) {
    if (static_cast<int>(w.f.size()) != params.r || w.pi.degree() != params.r)
        throw InvalidParameters("wreath element does not match params");
}

} // namespace

WreathElement wreath_identity(const WreathParams& params) {
    return WreathElement{std::vector<int>(params.r, 0), Permutation(params.r)};
}

WreathElement wreath_mul(const WreathElement& a, const WreathElement& b,
                         const WreathParams& params) {
    check_element(a, params);
    check_element(b, params);
    // (f,pi)(g,sigma) = (f + g o pi^{-1}, pi o sigma)
    Permutation pinv = inverse(a.pi);
    std::vector<int> f(params.r);
    for (int i = 0; i < params.r; ++i) f[i] = mod_n(a.f[i] + b.f[pinv(i)], params.n);
    return WreathElement{std::move(f), compose(a.pi, b.pi)};
}

WreathElement wreath_inv(const WreathElement& a, const WreathParams& params) {
    check_element(a, params);
    // (f,pi)^{-1} = (-f o pi, pi^{-1})
    std::vector<int> f(params.r);
    for (int i = 0; i < params.r; ++i) f[i] = mod_n(-a.f[a.pi(i)], params.n);
    return WreathElement{std::move(f), inverse(a.pi)};
}

WreathElement wreath_pow(const WreathElement& a, long e, const WreathParams& params) {
    WreathElement base = e < 0 ? wreath_inv(a, params) : a;
    if (e < 0) e = -e;
    WreathElement acc = wreath_identity(params);
    while (e > 0) {
        if (e & 1) acc = wreath_mul(acc, base, params);
        base = wreath_mul(base, base, params);
        e >>= 1;
    }
    return acc;
}

Permutation sigma(const WreathParams& params) {
    std::vector<int> img(params.D);
    for (int b = 0; b < params.r; ++b)
        for (int a = 0; a < params.n; ++a)
            img[b * params.n + a] = b * params.n + ((a + 1) % params.n);
    return Permutation::unchecked(std::move(img));
}

Permutation to_perm(const WreathElement& w, const WreathParams& params) {
    check_element(w, params);
    std::vector<int> img(params.D);
    for (int b = 0; b < params.r; ++b) {
        int jb = w.pi(b); // 0-based image block
        int shift = w.f[jb];
        for (int a = 0; a < params.n; ++a)
            img[b * params.n + a] = jb * params.n + ((a + shift) % params.n);
    }
    return Permutation::unchecked(std::move(img));
}

WreathElement from_perm(const Permutation& g, const WreathParams& params) {
    if (g.degree() != params.D) throw DegreeMismatch();
    Permutation s = sigma(params);
    if (compose(g, s) != compose(s, g)) throw NotInWreathGroup("element does not commute with sigma");
    std::vector<int> f(params.r, 0);
    std::vector<int> pi_img(params.r);
    for (int b = 0; b < params.r; ++b) {
        int image = g(b * params.n); // image of the block's residue-0 point
        pi_img[b] = image / params.n;
        f[pi_img[b]] = image % params.n;
    }
    WreathElement w{std::move(f), Permutation(std::move(pi_img))};
    if (to_perm(w, params) != g) throw NotInWreathGroup("inconsistent block structure");
    return w;
}

WreathElement rho(int i, const WreathParams& params) {
    if (i < 1 || i > params.r) throw IndexOutOfRange("rho index");
    WreathElement w = wreath_identity(params);
    w.f[i - 1] = 1 % params.n;
    return w;
}

WreathElement tau(int i, int j, const WreathParams& params) {
    if (i < 1 || j < 1 || i > params.r || j > params.r || i == j)
        throw IndexOutOfRange("tau indices");
    WreathElement w = wreath_identity(params);
    std::vector<int> img(params.r);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[i - 1], img[j - 1]);
    w.pi = Permutation::unchecked(std::move(img));
    return w;
}

WreathElement gamma_j(int j, const WreathParams& params) {
    if (params.n % 2 != 0) throw InvalidParameters("gamma_j requires even n");
    if (j < 0 || 2 * j > params.r - 1) throw IndexOutOfRange("gamma_j index");
    WreathElement w = wreath_identity(params);
    for (int i = 1; i <= params.r - 2 * j; ++i)
        w = wreath_mul(w, wreath_pow(rho(i, params), params.n / 2, params), params);
    for (int i = 0; i < j; ++i)
        w = wreath_mul(w, tau(params.r - 1 - 2 * i, params.r - 2 * i, params), params);
    return w;
}

WreathType type_of(const WreathElement& w, const WreathParams& params) {
    check_element(w, params);
    WreathType t;
    std::vector<char> seen(params.r, 0);
    for (int i = 0; i < params.r; ++i) {
        if (seen[i]) continue;
        int len = 0, sum = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            sum += w.f[j];
            j = w.pi(j);
            ++len;
        }
        ++t[{mod_n(sum, params.n), len}];
    }
    return t;
}

bool is_conjugate(const WreathElement& a, const WreathElement& b, const WreathParams& params) {
    return type_of(a, params) == type_of(b, params);
}

BigInt centralizer_order(const WreathType& t, const WreathParams& params) {
    long total = 0;
    for (const auto& [ak, cnt] : t) total += static_cast<long>(ak.second) * cnt;
    if (total != params.r) throw InvalidParameters("type inconsistent with r");
    BigInt order = 1;
    for (const auto& [ak, cnt] : t) {
        order *= factorial(static_cast<unsigned long>(cnt));
        order *= pow_bigint(BigInt(ak.second) * params.n, static_cast<unsigned long>(cnt));
    }
    return order;
}

Classification classify(const WreathElement& w, const WreathParams& params) {
    check_element(w, params);
    const int n = params.n, r = params.r;
    std::vector<int> fixed_blocks, rotated_blocks, moved_blocks;
    for (int i = 0; i < r; ++i) {
        if (w.pi(i) != i)
            moved_blocks.push_back(i);
        else if (w.f[i] != 0)
            rotated_blocks.push_back(i);
        else
            fixed_blocks.push_back(i);
    }

    // involution on blocks with zero twist sums <=> all point orbits have size 2
    bool pi_involution = true;
    bool two_cycle_sums_zero = true;
    for (int i : moved_blocks) {
        if (w.pi(w.pi(i)) != i) pi_involution = false;
        else if (mod_n(w.f[i] + w.f[w.pi(i)], n) != 0) two_cycle_sums_zero = false;
    }
    bool rotated_half_turn = n % 2 == 0;
    for (int i : rotated_blocks)
        if (w.f[i] != n / 2) rotated_half_turn = false;

    Classification c;
    if (!moved_blocks.empty() && pi_involution && two_cycle_sums_zero && fixed_blocks.empty() &&
        (rotated_blocks.empty() || rotated_half_turn)) {
        if (rotated_blocks.empty()) {
            c.tag = WreathCase::Case1a;
            return c;
        }
        c.tag = WreathCase::Case1b;
        c.ell = static_cast<int>(rotated_blocks.size());
        return c;
    }
    if (moved_blocks.empty() && rotated_blocks.size() == 2 && rotated_half_turn) {
        c.tag = WreathCase::Case2a;
        c.i = rotated_blocks[0] + 1;
        c.j = rotated_blocks[1] + 1;
        return c;
    }
    if (moved_blocks.size() == 2 && rotated_blocks.empty() && pi_involution &&
        two_cycle_sums_zero) {
        c.tag = WreathCase::Case2b;
        c.i = moved_blocks[0] + 1;
        c.j = moved_blocks[1] + 1;
        c.s = w.f[moved_blocks[1]];
        return c;
    }
    if (moved_blocks.empty() && rotated_blocks.size() == 1) {
        c.tag = WreathCase::Case3;
        c.i = rotated_blocks[0] + 1;
        c.s = w.f[rotated_blocks[0]];
        return c;
    }
    return c;
}

CyclePattern induced_cycle_pattern(const WreathType& t, const WreathParams& params) {
    CyclePattern out;
    for (const auto& [ak, cnt] : t) {
        int a = ak.first, k = ak.second;
        int g = a == 0 ? params.n : std::gcd(params.n, a);
        int len = k * params.n / g;
        for (int c = 0; c < cnt * g; ++c) out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> wreath_group_generators(const WreathParams& params) {
    std::vector<Permutation> gens;
    if (params.n >= 2) gens.push_back(to_perm(rho(1, params), params));
    if (params.r >= 2) gens.push_back(to_perm(tau(1, 2, params), params));
    if (params.r >= 3) {
        WreathElement cyc = wreath_identity(params);
        std::vector<int> img(params.r);
        for (int i = 0; i < params.r; ++i) img[i] = (i + 1) % params.r;
        cyc.pi = Permutation::unchecked(std::move(img));
        gens.push_back(to_perm(cyc, params));
    }
    return gens;
}

GeneratedGroup wreath_group(const WreathParams& params) {
    return GeneratedGroup(params.D, wreath_group_generators(params));
}

std::string to_literal(const WreathElement& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.f[i]);
    }
    out += "];";
    out += to_cycle_string(w.pi);
    return out;
}

WreathElement parse_wreath_element(const std::string& text, const WreathParams& params) {
    size_t semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("missing ';' in wreath element literal");
    std::string fpart = text.substr(0, semi);
    std::string ppart = text.substr(semi + 1);

    size_t lb = fpart.find('[');
    size_t rb = fpart.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("missing residue list in wreath element literal");
    std::vector<int> f;
    std::string body = fpart.substr(lb + 1, rb - lb - 1);
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
        if (pos >= body.size()) break;
        size_t end = body.find(',', pos);
        if (end == std::string::npos) end = body.size();
        std::string tok = body.substr(pos, end - pos);
        try {
            f.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad residue value '" + tok + "'");
        }
        pos = end + 1;
    }
    if (static_cast<int>(f.size()) != params.r)
        throw ParseError("residue list length does not match r");
    for (int& v : f) {
        if (v < 0 || v >= params.n) throw ParseError("residue out of range");
    }
    return WreathElement{std::move(f), parse_permutation(ppart, params.r)};
}

} // namespace dyngal
