#include "dyngal/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dyngal/dynatomic.hpp"
#include "dyngal/errors.hpp"

namespace dyngal {

GeneratedGroup group_of(const SubgroupSpec& spec, const WreathParams& params) {
    std::vector<Permutation> gens;
    gens.reserve(spec.generators.size());
    for (const auto& w : spec.generators) gens.push_back(to_perm(w, params));
    return GeneratedGroup(params.D, std::move(gens));
}

namespace {

WreathElement lift(const Permutation& pi, const WreathParams& params) {
    return WreathElement{std::vector<int>(params.r, 0), pi};
}

} // namespace

SubgroupSpec build_pullback(int n, int r, const std::string& id,
                            const std::vector<Permutation>& m_gens) {
    WreathParams params(n, r);
    SubgroupSpec spec;
    spec.id = id;
    spec.n = n;
    spec.family = SubgroupFamily::PullbackSr;
    for (int i = 1; i <= r; ++i) spec.generators.push_back(rho(i, params));
    for (const auto& m : m_gens) {
        if (m.degree() != r) throw InvalidParameters("pullback generator degree mismatch");
        spec.generators.push_back(lift(m, params));
    }
    spec.provenance = "full preimage of a subgroup of S_r";
    return spec;
}

SubgroupSpec build_sum_kernel(int n, int r, int q, bool sign_twisted) {
    if (q < 2 || n % q != 0 || !is_prime_u64(static_cast<std::uint64_t>(q)))
        throw InvalidCharacter("q must be a prime divisor of n");
    if (sign_twisted && (q != 2 || n % 2 != 0))
        throw InvalidCharacter("sign-twisted kernel needs q = 2 and even n");
    WreathParams params(n, r);
    SubgroupSpec spec;
    spec.id = sign_twisted ? "sum_kernel_q2_twisted" : "sum_kernel_q" + std::to_string(q);
    spec.n = n;
    spec.family = SubgroupFamily::SumKernel;
    spec.q = q;
    spec.sign_twisted = sign_twisted;
    if (!sign_twisted) {
        for (const auto& g : symmetric_product_gens(r, r)) spec.generators.push_back(lift(g, params));
        // rho_1 rho_2^{-1} and rho_1^q generate the residue part of the kernel
        WreathElement diff = wreath_identity(params);
        diff.f[0] = 1;
        diff.f[1] = n - 1;
        spec.generators.push_back(diff);
        spec.generators.push_back(wreath_pow(rho(1, params), q, params));
    } else {
        for (const auto& a : alternating_gens(r)) spec.generators.push_back(lift(a, params));
        WreathElement diff = wreath_identity(params);
        diff.f[0] = 1;
        diff.f[1] = n - 1;
        spec.generators.push_back(diff);
        spec.generators.push_back(wreath_pow(rho(1, params), 2, params));
        spec.generators.push_back(wreath_mul(tau(1, 2, params), rho(1, params), params));
    }
    spec.provenance = sign_twisted ? "kernel of (f,pi) -> sum f + sgn pi mod 2"
                                   : "kernel of (f,pi) -> sum f mod " + std::to_string(q);
    return spec;
}

SubgroupSpec build_diagonal_residue(int n, int r, int q) {
    if (q < 2 || n % q != 0 || !is_prime_u64(static_cast<std::uint64_t>(q)) ||
        std::gcd(q, r) != 1)
        throw InvalidParameters("q must be a prime divisor of n coprime to r");
    WreathParams params(n, r);
    SubgroupSpec spec;
    spec.id = "diagonal_q" + std::to_string(q);
    spec.n = n;
    spec.family = SubgroupFamily::DiagonalResidue;
    spec.q = q;
    for (const auto& g : symmetric_product_gens(r, r)) spec.generators.push_back(lift(g, params));
    WreathElement all_ones = wreath_identity(params);
    for (int i = 0; i < r; ++i) all_ones.f[i] = 1;
    spec.generators.push_back(all_ones);
    spec.generators.push_back(wreath_pow(rho(1, params), q, params));
    spec.provenance = "residues constant mod " + std::to_string(q) + ", extended by S_r";
    return spec;
}

std::vector<Permutation> symmetric_product_gens(int r, int k) {
    std::vector<Permutation> gens;
    auto add_cycle = [&](std::initializer_list<int> pts) {
        std::vector<int> img(r);
        std::iota(img.begin(), img.end(), 0);
        auto it = pts.begin();
        int first = *it - 1, prev = *it - 1;
        for (++it; it != pts.end(); ++it) {
            img[prev] = *it - 1;
            prev = *it - 1;
        }
        img[prev] = first;
        gens.push_back(Permutation::unchecked(std::move(img)));
    };
    if (k >= 2) add_cycle({1, 2});
    if (k >= 3) {
        std::vector<int> img(r);
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < k; ++i) img[i] = (i + 1) % k;
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    if (r - k >= 2) add_cycle({k + 1, k + 2});
    if (r - k >= 3) {
        std::vector<int> img(r);
        std::iota(img.begin(), img.end(), 0);
        for (int i = k; i < r; ++i) img[i] = k + (i - k + 1) % (r - k);
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    return gens;
}

std::vector<Permutation> imprimitive_wreath_gens(int r, int a) {
    if (r % a != 0) throw InvalidParameters("block size must divide degree");
    int b = r / a;
    std::vector<Permutation> gens;
    std::vector<int> img(r);
    // S_a acting inside the first block
    if (a >= 2) {
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[0], img[1]);
        gens.push_back(Permutation::unchecked(img));
    }
    if (a >= 3) {
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < a; ++i) img[i] = (i + 1) % a;
        gens.push_back(Permutation::unchecked(img));
    }
    // swap the first two blocks pointwise
    if (b >= 2) {
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < a; ++i) std::swap(img[i], img[i + a]);
        gens.push_back(Permutation::unchecked(img));
    }
    // rotate the blocks
    if (b >= 3) {
        for (int j = 0; j < b; ++j)
            for (int i = 0; i < a; ++i) img[j * a + i] = ((j + 1) % b) * a + i;
        gens.push_back(Permutation::unchecked(img));
    }
    return gens;
}

std::vector<Permutation> alternating_gens(int r) {
    if (r < 3) return {};
    std::vector<Permutation> gens;
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1;
    img[1] = 2;
    img[2] = 0;
    gens.push_back(Permutation::unchecked(img));
    if (r == 3) return gens;
    std::iota(img.begin(), img.end(), 0);
    if (r % 2 == 1) {
        for (int i = 0; i < r; ++i) img[i] = (i + 1) % r;
    } else {
        for (int i = 1; i < r; ++i) img[i] = 1 + (i % (r - 1));
    }
    gens.push_back(Permutation::unchecked(img));
    return gens;
}

std::vector<Permutation> pgl2_gens(int q) {
    // points: field element v at index v, infinity at index q
    auto moebius = [&](int a, int b, int c, int d) {
        std::vector<int> img(q + 1);
        auto inv = [&](int x) { return static_cast<int>(powmod_u64(x, q - 2, q)); };
        for (int z = 0; z <= q; ++z) {
            int w;
            if (z == q) {
                w = c % q == 0 ? q : static_cast<int>((static_cast<long>(a) * inv(c)) % q);
            } else {
                int den = (c * z + d) % q;
                if (den == 0)
                    w = q;
                else
                    w = static_cast<int>((static_cast<long>((a * z + b) % q) * inv(den)) % q);
            }
            img[z] = w;
        }
        return Permutation::unchecked(std::move(img));
    };
    // multiplicative generator of F_q^*
    int g = 2;
    for (;; ++g) {
        bool primitive = true;
        for (int e = 1; e < q - 1 && primitive; ++e)
            if (powmod_u64(g, e, q) == 1 && e < q - 1) primitive = false;
        if (primitive) break;
    }
    return {moebius(1, 1, 0, 1), moebius(g, 0, 0, 1), moebius(0, 1, 1, 0)};
}

std::vector<Permutation> agl23_gens() {
    // AGL(2,3) on the 9 points of the affine plane, (x,y) at index x + 3y
    auto affine = [](int a, int b, int c, int d, int e, int f) {
        std::vector<int> img(9);
        for (int p = 0; p < 9; ++p) {
            int x = p % 3, y = p / 3;
            img[p] = (a * x + b * y + e) % 3 + 3 * ((c * x + d * y + f) % 3);
        }
        return Permutation::unchecked(std::move(img));
    };
    return {affine(1, 0, 0, 1, 1, 0), affine(1, 0, 0, 1, 0, 1), affine(1, 1, 0, 1, 0, 0),
            affine(0, 1, 1, 0, 0, 0)};
}

namespace {

SubgroupSpec with_index(SubgroupSpec spec, BigInt index) {
    spec.expected_index = std::move(index);
    return spec;
}

Catalog sorted_catalog(int n, std::string status, std::vector<SubgroupSpec> specs) {
    std::stable_sort(specs.begin(), specs.end(), [](const SubgroupSpec& a, const SubgroupSpec& b) {
        return a.expected_index.value_or(0) > b.expected_index.value_or(0);
    });
    return Catalog{n, std::move(status), std::move(specs)};
}

} // namespace

Catalog bundled_catalog(int n) {
    switch (n) {
        case 1: {
            // maximal subgroups of S_2: only the trivial group
            SubgroupSpec triv = build_pullback(1, 2, "pullback_A2", {});
            triv.expected_index = 2;
            return Catalog{1, "reconstructed", {triv}};
        }
        case 5: {
            const int r = 6;
            std::vector<SubgroupSpec> specs;
            specs.push_back(with_index(build_diagonal_residue(5, r, 5), 3125));
            specs.push_back(with_index(
                build_pullback(5, r, "pullback_S4xS2", symmetric_product_gens(r, 4)), 15));
            specs.push_back(with_index(
                build_pullback(5, r, "pullback_S2wrS3", imprimitive_wreath_gens(r, 2)), 15));
            specs.push_back(with_index(
                build_pullback(5, r, "pullback_S3wrS2", imprimitive_wreath_gens(r, 3)), 10));
            specs.push_back(with_index(
                build_pullback(5, r, "pullback_S5_point", symmetric_product_gens(r, 5)), 6));
            specs.push_back(
                with_index(build_pullback(5, r, "pullback_PGL2_5", pgl2_gens(5)), 6));
            specs.push_back(with_index(build_sum_kernel(5, r, 5, false), 5));
            specs.push_back(
                with_index(build_pullback(5, r, "pullback_A6", alternating_gens(r)), 2));
            return sorted_catalog(5, "paper-verified", std::move(specs));
        }
        case 6: {
            const int r = 9;
            std::vector<SubgroupSpec> specs;
            specs.push_back(
                with_index(build_pullback(6, r, "pullback_AGL2_3", agl23_gens()), 840));
            specs.push_back(with_index(
                build_pullback(6, r, "pullback_S3wrS3", imprimitive_wreath_gens(r, 3)), 280));
            specs.push_back(with_index(build_diagonal_residue(6, r, 2), 256));
            specs.push_back(with_index(
                build_pullback(6, r, "pullback_S5xS4", symmetric_product_gens(r, 5)), 126));
            specs.push_back(with_index(
                build_pullback(6, r, "pullback_S6xS3", symmetric_product_gens(r, 6)), 84));
            specs.push_back(with_index(
                build_pullback(6, r, "pullback_S7xS2", symmetric_product_gens(r, 7)), 36));
            specs.push_back(with_index(
                build_pullback(6, r, "pullback_S8_point", symmetric_product_gens(r, 8)), 9));
            specs.push_back(with_index(build_sum_kernel(6, r, 3, false), 3));
            specs.push_back(with_index(build_sum_kernel(6, r, 2, false), 2));
            specs.push_back(with_index(build_sum_kernel(6, r, 2, true), 2));
            specs.push_back(
                with_index(build_pullback(6, r, "pullback_A9", alternating_gens(r)), 2));
            return sorted_catalog(6, "paper-verified", std::move(specs));
        }
        case 7: {
            const int r = 18;
            std::vector<SubgroupSpec> specs;
            specs.push_back(with_index(build_diagonal_residue(7, r, 7),
                                       pow_bigint(BigInt(7), 17)));
            for (int k = 10; k <= 17; ++k) {
                std::string id = "pullback_S" + std::to_string(k) +
                                 (k == 17 ? "_point" : "xS" + std::to_string(r - k));
                specs.push_back(with_index(build_pullback(7, r, id, symmetric_product_gens(r, k)),
                                           binomial(18, static_cast<unsigned long>(k))));
            }
            for (int a : {9, 6, 3, 2}) {
                int b = r / a;
                std::string id = "pullback_S" + std::to_string(a) + "wrS" + std::to_string(b);
                BigInt idx = factorial(18) /
                             (pow_bigint(factorial(static_cast<unsigned long>(a)),
                                         static_cast<unsigned long>(b)) *
                              factorial(static_cast<unsigned long>(b)));
                specs.push_back(with_index(build_pullback(7, r, id, imprimitive_wreath_gens(r, a)),
                                           std::move(idx)));
            }
            specs.push_back(with_index(build_pullback(7, r, "pullback_PGL2_17", pgl2_gens(17)),
                                       factorial(18) / BigInt(4896)));
            specs.push_back(with_index(build_sum_kernel(7, r, 7, false), 7));
            specs.push_back(
                with_index(build_pullback(7, r, "pullback_A18", alternating_gens(r)), 2));
            return sorted_catalog(7, "reconstructed", std::move(specs));
        }
        default:
            throw UnsupportedN("no bundled catalog for n=" + std::to_string(n));
    }
}

namespace {

std::string family_token(const SubgroupSpec& s) {
    switch (s.family) {
        case SubgroupFamily::PullbackSr:
            return "PullbackSr";
        case SubgroupFamily::SumKernel:
            return s.sign_twisted ? "SumKernelTwisted(" + std::to_string(s.q) + ")"
                                  : "SumKernel(" + std::to_string(s.q) + ")";
        case SubgroupFamily::DiagonalResidue:
            return "DiagonalResidue(" + std::to_string(s.q) + ")";
        case SubgroupFamily::External:
            return "External";
    }
    return "External";
}

void parse_family_token(const std::string& tok, SubgroupSpec& spec, int line_no) {
    auto args = [&](const std::string& name) {
        std::string inner = tok.substr(name.size() + 1, tok.size() - name.size() - 2);
        try {
            return std::stoi(inner);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad family parameter");
        }
    };
    if (tok == "PullbackSr") {
        spec.family = SubgroupFamily::PullbackSr;
    } else if (tok.rfind("SumKernelTwisted(", 0) == 0 && tok.back() == ')') {
        spec.family = SubgroupFamily::SumKernel;
        spec.sign_twisted = true;
        spec.q = args("SumKernelTwisted");
    } else if (tok.rfind("SumKernel(", 0) == 0 && tok.back() == ')') {
        spec.family = SubgroupFamily::SumKernel;
        spec.q = args("SumKernel");
    } else if (tok.rfind("DiagonalResidue(", 0) == 0 && tok.back() == ')') {
        spec.family = SubgroupFamily::DiagonalResidue;
        spec.q = args("DiagonalResidue");
    } else if (tok == "External") {
        spec.family = SubgroupFamily::External;
    } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown family '" + tok + "'");
    }
}

} // namespace

std::string render_catalog(const Catalog& catalog) {
    std::ostringstream out;
    out << "catalog n=" << catalog.n << " status=" << catalog.status << "\n";
    for (const auto& spec : catalog.specs) {
        out << "subgroup id=" << spec.id << " family=" << family_token(spec);
        if (spec.expected_index) out << " index=" << spec.expected_index->get_str();
        out << "\n";
        for (const auto& g : spec.generators) out << "  " << to_literal(g) << "\n";
    }
    return out.str();
}

Catalog parse_catalog(const std::string& text) {
    Catalog catalog;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    WreathParams params(1, 1);
    SubgroupSpec* current = nullptr;

    auto split_kv = [&](const std::string& tok, const std::string& key) -> std::string {
        if (tok.rfind(key + "=", 0) != 0)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + key + "=...");
        return tok.substr(key.size() + 1);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        size_t hash = stripped.find('#');
        if (hash != std::string::npos) stripped.resize(hash);
        size_t first = stripped.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        bool indented = first > 0;
        std::istringstream toks(stripped);
        std::string tok;
        toks >> tok;
        if (!have_header) {
            if (tok != "catalog") throw ParseError("line 1: expected catalog header");
            std::string nkv, skv;
            toks >> nkv >> skv;
            try {
                catalog.n = std::stoi(split_kv(nkv, "n"));
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad n value");
            }
            catalog.status = split_kv(skv, "status");
            if (catalog.status != "paper-verified" && catalog.status != "reconstructed" &&
                catalog.status != "external")
                throw ParseError("line " + std::to_string(line_no) + ": unknown status flag");
            if (catalog.n < 1) throw ParseError("line " + std::to_string(line_no) + ": bad n");
            params = dynatomic_params(catalog.n);
            have_header = true;
            continue;
        }
        if (tok == "subgroup") {
            SubgroupSpec spec;
            spec.n = catalog.n;
            std::string idkv, famkv, idxkv;
            toks >> idkv >> famkv;
            spec.id = split_kv(idkv, "id");
            parse_family_token(split_kv(famkv, "family"), spec, line_no);
            if (toks >> idxkv) {
                std::string v = split_kv(idxkv, "index");
                try {
                    spec.expected_index = BigInt(v);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no) + ": bad index value");
                }
            }
            catalog.specs.push_back(std::move(spec));
            current = &catalog.specs.back();
            continue;
        }
        if (!indented || current == nullptr)
            throw ParseError("line " + std::to_string(line_no) + ": unexpected content");
        // generator line
        try {
            current->generators.push_back(parse_wreath_element(stripped.substr(first), params));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_header) throw ParseError("missing catalog header");

    // structural checks deferred to validate(); basic invariants here
    std::vector<std::string> ids;
    for (const auto& s : catalog.specs) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw ValidationError("duplicate subgroup ids in catalog");
    for (size_t i = 1; i < catalog.specs.size(); ++i) {
        const auto& a = catalog.specs[i - 1].expected_index;
        const auto& b = catalog.specs[i].expected_index;
        if (a && b && *a < *b) throw ValidationError("catalog not sorted by descending index");
    }
    return catalog;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

void save_catalog(const Catalog& catalog, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write catalog file " + path);
    out << render_catalog(catalog);
}

std::vector<ValidationEntry> validate(const SubgroupSpec& spec, const WreathParams& params) {
    std::vector<ValidationEntry> report;
    Permutation sig = sigma(params);
    bool commute = true;
    std::string bad;
    std::vector<Permutation> perms;
    for (const auto& w : spec.generators) {
        Permutation g = to_perm(w, params);
        if (compose(g, sig) != compose(sig, g)) {
            commute = false;
            bad = to_literal(w);
            break;
        }
        perms.push_back(std::move(g));
    }
    report.push_back({spec.id, "generators_commute_with_sigma", commute,
                      commute ? "" : "generator " + bad + " fails"});
    if (!commute) return report;

    GeneratedGroup H(params.D, perms);
    BigInt order_w = pow_bigint(BigInt(params.n), static_cast<unsigned long>(params.r)) *
                     factorial(static_cast<unsigned long>(params.r));
    BigInt order_h = H.order();
    if (spec.expected_index) {
        BigInt idx = order_w / order_h;
        bool ok = idx == *spec.expected_index;
        report.push_back({spec.id, "index_matches_expected", ok,
                          "computed " + idx.get_str() + ", expected " +
                              spec.expected_index->get_str()});
    }
    bool proper = order_h < order_w && order_h > 1;
    report.push_back({spec.id, "proper_nontrivial", proper,
                      "order " + order_h.get_str() + " of " + order_w.get_str()});
    return report;
}

std::vector<ValidationEntry> validate(const Catalog& catalog) {
    std::vector<ValidationEntry> out;
    WreathParams params = dynatomic_params(catalog.n);
    for (const auto& spec : catalog.specs) {
        auto part = validate(spec, params);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace dyngal
