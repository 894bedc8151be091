#include "dyngal/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "dyngal/errors.hpp"

namespace dyngal {

std::vector<Rational> enumerate_heights(long h) {
    if (h < 1) throw InvalidParameters("height bound must be positive");
    std::vector<Rational> out;
    for (long b = 1; b <= h; ++b)
        for (long a = -h; a <= h; ++a) {
            if (std::gcd(std::abs(a), b) != 1) continue;
            out.push_back(make_rational(a, b));
        }
    std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) {
        BigInt ax = abs(x.get_num()), ay = abs(y.get_num());
        BigInt hx = ax > x.get_den() ? ax : x.get_den();
        BigInt hy = ay > y.get_den() ? ay : y.get_den();
        if (hx != hy) return hx < hy;
        if (x.get_num() != y.get_num()) return x.get_num() < y.get_num();
        return x.get_den() < y.get_den();
    });
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : data) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string generator_hash(const SubgroupSpec& spec) {
    std::string blob;
    for (const auto& g : spec.generators) blob += to_literal(g) + "\n";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(blob)));
    return std::string(buf);
}

std::optional<PatternSet> load_cached_pattern_set(const std::string& path,
                                                  const SubgroupSpec& spec, int n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("schema") != 1 || j.at("n") != n || j.at("id") != spec.id ||
            j.at("generator_hash") != generator_hash(spec))
            return std::nullopt;
        PatternSet ps;
        ps.subgroup_id = spec.id;
        ps.provenance = "enumerated";
        ps.budget_used = BigInt(j.at("order").get<std::string>());
        for (const auto& pat : j.at("patterns")) {
            CyclePattern cp;
            for (const auto& v : pat) cp.push_back(v.get<int>());
            ps.patterns.insert(std::move(cp));
        }
        return ps;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_cached_pattern_set(const std::string& path, const SubgroupSpec& spec, int n,
                              const PatternSet& ps) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = n;
    j["id"] = spec.id;
    j["generator_hash"] = generator_hash(spec);
    j["order"] = ps.budget_used.get_str();
    nlohmann::json pats = nlohmann::json::array();
    for (const auto& pat : ps.patterns) pats.push_back(pat);
    j["patterns"] = std::move(pats);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return; // cache is best-effort
        out << j.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
}

} // namespace

PatternSet pattern_set(const SubgroupSpec& spec, const WreathParams& params, const BigInt& budget,
                       const std::string& cache_dir) {
    std::string cache_path;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        cache_path = cache_dir + "/patterns_n" + std::to_string(params.n) + "_" + spec.id + "_" +
                     generator_hash(spec) + ".json";
        if (auto cached = load_cached_pattern_set(cache_path, spec, params.n)) return *cached;
    }

    GeneratedGroup H = group_of(spec, params);
    if (H.order() > budget)
        throw BudgetExceeded("pattern set enumeration budget exceeded for " + spec.id);

    PatternSet ps;
    ps.subgroup_id = spec.id;
    ps.provenance = "enumerated";
    ps.budget_used = H.order();

    const int D = params.D;
    std::vector<char> seen(D);
    CyclePattern scratch;
    H.bsgs().for_each_element([&](const Permutation& g) {
        std::fill(seen.begin(), seen.end(), 0);
        scratch.clear();
        for (int i = 0; i < D; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = g(j);
                ++len;
            }
            scratch.push_back(len);
        }
        std::sort(scratch.begin(), scratch.end());
        ps.patterns.insert(scratch);
        return true;
    });

    if (!cache_path.empty()) store_cached_pattern_set(cache_path, spec, params.n, ps);
    return ps;
}

namespace {

struct UnitOption {
    int a, k, g; // residue class, pi-cycle length, gcd(n, a)
};

bool consistent_type_dfs(const std::vector<std::pair<int, int>>& lengths, size_t li,
                         const std::vector<std::vector<UnitOption>>& options, int slots_left,
                         WreathType& acc, const std::function<bool(const WreathType&)>& pred) {
    if (li == lengths.size()) return slots_left == 0 && pred(acc);
    auto [len, count] = lengths[li];
    const auto& opts = options[li];

    // distribute `count` cycles of this length over the unit options
    std::function<bool(size_t, int, int)> rec = [&](size_t oi, int remaining, int slots) -> bool {
        if (remaining == 0) return consistent_type_dfs(lengths, li + 1, options, slots, acc, pred);
        if (oi == opts.size()) return false;
        const UnitOption& u = opts[oi];
        int max_units = std::min(remaining / u.g, slots / u.k);
        for (int cnt = 0; cnt <= max_units; ++cnt) {
            if (cnt > 0) acc[{u.a, u.k}] += cnt;
            bool ok = rec(oi + 1, remaining - cnt * u.g, slots - cnt * u.k);
            if (cnt > 0) {
                auto it = acc.find({u.a, u.k});
                it->second -= cnt;
                if (it->second == 0) acc.erase(it);
            }
            if (ok) return true;
        }
        return false;
    };
    return rec(0, count, slots_left);
}

} // namespace

bool exists_consistent_type(const CyclePattern& pattern, const WreathParams& params,
                            const std::function<bool(const WreathType&)>& pred) {
    long total = std::accumulate(pattern.begin(), pattern.end(), 0L);
    if (total != params.D) return false;

    std::vector<std::pair<int, int>> lengths; // (length, multiplicity)
    for (int len : pattern) {
        if (!lengths.empty() && lengths.back().first == len)
            ++lengths.back().second;
        else
            lengths.emplace_back(len, 1);
    }
    std::vector<std::vector<UnitOption>> options(lengths.size());
    for (size_t i = 0; i < lengths.size(); ++i) {
        int len = lengths[i].first;
        for (int g = 1; g <= params.n; ++g) {
            if (params.n % g != 0) continue;
            long kg = static_cast<long>(len) * g;
            if (kg % params.n != 0) continue;
            int k = static_cast<int>(kg / params.n);
            if (k < 1 || k > params.r) continue;
            for (int a = 0; a < params.n; ++a) {
                int gg = a == 0 ? params.n : std::gcd(params.n, a);
                if (gg == g) options[i].push_back({a, k, g});
            }
        }
        if (options[i].empty()) return false;
    }
    WreathType acc;
    return consistent_type_dfs(lengths, 0, options, params.r, acc, pred);
}

SieveContext::SieveContext(int n, Catalog catalog, const BigInt& enumeration_budget,
                           const std::string& cache_dir, int threads)
    : inst_(build_dynatomic(n)), catalog_(std::move(catalog)) {
    if (catalog_.n != n) throw InvalidParameters("catalog n mismatch");
    size_t count = catalog_.specs.size();
    enumerated_.resize(count);
    pi_types_.resize(count);

    std::vector<int> needs_enum;
    for (size_t i = 0; i < count; ++i) {
        const SubgroupSpec& spec = catalog_.specs[i];
        GeneratedGroup H = group_of(spec, inst_.params);
        if (H.order() <= enumeration_budget) {
            needs_enum.push_back(static_cast<int>(i));
            continue;
        }
        switch (spec.family) {
            case SubgroupFamily::PullbackSr: {
                // cycle types of the S_r image
                std::vector<Permutation> pi_gens;
                for (const auto& w : spec.generators) pi_gens.push_back(w.pi);
                GeneratedGroup M(inst_.params.r, std::move(pi_gens));
                if (M.order() > enumeration_budget) {
                    non_excludable_.push_back(spec.id);
                    break;
                }
                std::set<CyclePattern> types;
                M.bsgs().for_each_element([&](const Permutation& g) {
                    types.insert(cycle_pattern(g));
                    return true;
                });
                pi_types_[i] = std::move(types);
                break;
            }
            case SubgroupFamily::SumKernel:
            case SubgroupFamily::DiagonalResidue:
                break; // closed-form predicates
            case SubgroupFamily::External:
                non_excludable_.push_back(spec.id);
                break;
        }
    }

    // enumerated pattern sets, parallel across specs
    int nthreads = std::max(1, threads);
    std::vector<std::optional<PatternSet>> results(count);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= needs_enum.size()) break;
            int i = needs_enum[idx];
            results[i] = pattern_set(catalog_.specs[i], inst_.params, enumeration_budget, cache_dir);
        }
    };
    if (nthreads == 1 || needs_enum.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < count; ++i)
        if (results[i]) enumerated_[i] = std::move(results[i]);
}

bool SieveContext::realizes(size_t spec_idx, const CyclePattern& pattern) const {
    const SubgroupSpec& spec = catalog_.specs[spec_idx];
    if (enumerated_[spec_idx]) return enumerated_[spec_idx]->patterns.count(pattern) > 0;

    const WreathParams& params = inst_.params;
    if (pi_types_[spec_idx]) {
        const auto& types = *pi_types_[spec_idx];
        return exists_consistent_type(pattern, params, [&](const WreathType& t) {
            CyclePattern pi_type;
            std::map<int, int> per_k;
            for (const auto& [ak, cnt] : t) per_k[ak.second] += cnt;
            for (const auto& [k, cnt] : per_k)
                for (int c = 0; c < cnt; ++c) pi_type.push_back(k);
            return types.count(pi_type) > 0;
        });
    }
    switch (spec.family) {
        case SubgroupFamily::SumKernel: {
            int q = spec.q;
            bool twisted = spec.sign_twisted;
            return exists_consistent_type(pattern, params, [&](const WreathType& t) {
                long sum = 0, par = 0;
                for (const auto& [ak, cnt] : t) {
                    sum += static_cast<long>(ak.first) * cnt;
                    par += static_cast<long>(ak.second - 1) * cnt;
                }
                if (twisted) return (sum + par) % 2 == 0;
                return sum % q == 0;
            });
        }
        case SubgroupFamily::DiagonalResidue: {
            int q = spec.q;
            return exists_consistent_type(pattern, params, [&](const WreathType& t) {
                for (int eps = 0; eps < q; ++eps) {
                    bool ok = true;
                    for (const auto& [ak, cnt] : t) {
                        if ((ak.first - static_cast<long>(ak.second) * eps) % q != 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) return true;
                }
                return false;
            });
        }
        default:
            return true; // non-excludable
    }
}

SieveVerdict SieveContext::certify(const Rational& c, long prime_budget) const {
    SieveVerdict verdict;
    verdict.c = c;
    verdict.catalog_status = catalog_.status;

    Specialization s = specialize(inst_, c);
    if (!s.squarefree) {
        verdict.tag = VerdictTag::DiscriminantZero;
        return verdict;
    }

    size_t count = catalog_.specs.size();
    std::vector<char> excluded(count, 0);
    size_t excluded_count = 0;
    PrimeStream primes(static_cast<std::uint64_t>(inst_.D));
    long used = 0;
    while (used < prime_budget && excluded_count < count) {
        std::uint64_t p = primes.next();
        auto pattern = frobenius_pattern(inst_, c, p);
        if (!pattern) continue; // BadPrime, does not consume budget
        ++used;
        for (size_t i = 0; i < count; ++i) {
            if (excluded[i]) continue;
            if (!realizes(i, *pattern)) {
                excluded[i] = 1;
                ++excluded_count;
                verdict.witnesses.push_back({catalog_.specs[i].id, p, *pattern});
            }
        }
    }
    verdict.primes_consumed = used;
    if (excluded_count == count) {
        verdict.tag = VerdictTag::CertifiedGeneric;
    } else {
        verdict.tag = VerdictTag::CandidateExceptional;
        for (size_t i = 0; i < count; ++i)
            if (!excluded[i]) verdict.surviving_ids.push_back(catalog_.specs[i].id);
    }
    return verdict;
}

ScanReport scan(long h, const SieveContext& ctx, long prime_budget, int threads) {
    ScanReport report;
    report.n = ctx.instance().n;
    report.height = h;
    report.prime_budget = prime_budget;
    report.catalog_status = ctx.catalog().status;

    std::vector<Rational> values = enumerate_heights(h);
    report.verdicts.resize(values.size());

    int nthreads = std::max(1, threads);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= values.size()) break;
            report.verdicts[idx] = ctx.certify(values[idx], prime_budget);
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& v : report.verdicts) {
        if (v.tag == VerdictTag::CandidateExceptional) report.candidate_exceptional.push_back(v.c);
        if (v.tag == VerdictTag::DiscriminantZero) report.discriminant_zero.push_back(v.c);
    }
    return report;
}

} // namespace dyngal
