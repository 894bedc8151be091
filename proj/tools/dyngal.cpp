// Command-line front end: every published quantity the library reproduces
// is reachable from here, as JSON (default) or readable tables.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyngal/bounds.hpp"
#include "dyngal/catalog.hpp"
#include "dyngal/density.hpp"
#include "dyngal/dynatomic.hpp"
#include "dyngal/genus.hpp"
#include "dyngal/sieve.hpp"
#include "expected.hpp"

using json = nlohmann::json;
using namespace dyngal;

namespace {

constexpr const char* kArtifactVersion = "dyngal 0.1.0";
constexpr int kSchemaVersion = 1;

struct RunConfig {
    int n = 5;
    std::string catalog_path;
    long coset_limit = 10000;
    std::string enum_budget = "10000000";
    long prime_budget = 100;
    std::string cache_dir;
    bool table = false;
    int threads = 1;
    bool experimental_even = false;

    std::string canonical() const {
        return "n=" + std::to_string(n) + ";catalog=" + catalog_path +
               ";coset_limit=" + std::to_string(coset_limit) + ";budget=" + enum_budget +
               ";primes=" + std::to_string(prime_budget) + ";even=" +
               std::to_string(experimental_even);
    }
};

std::string config_hash(const RunConfig& cfg) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char ch : cfg.canonical()) {
        hash ^= ch;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

json report_header(const RunConfig& cfg) {
    json j;
    j["schema"] = kSchemaVersion;
    j["artifact"] = kArtifactVersion;
    j["config_hash"] = config_hash(cfg);
    return j;
}

std::string rational_str(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(text), 1);
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + text + "'");
    }
}

Catalog catalog_for(const RunConfig& cfg) {
    if (!cfg.catalog_path.empty()) return load_catalog(cfg.catalog_path);
    return bundled_catalog(cfg.n);
}

std::string place_label(const PlaceClass& pc) {
    return pc.at_infinity ? std::string("inf") : "d=" + std::to_string(pc.d);
}

json genus_report_json(const GenusReport& rep) {
    json j;
    j["subgroup"] = rep.subgroup_id;
    j["index"] = rep.index.get_str();
    j["genus"] = rep.genus;
    json contribs = json::array();
    for (const auto& c : rep.contributions) {
        contribs.push_back({{"place", place_label(c.place)},
                            {"multiplicity", c.place.multiplicity},
                            {"excess", c.excess},
                            {"contribution", c.contribution}});
    }
    j["contributions"] = std::move(contribs);
    return j;
}

void print_genus_table(const std::vector<GenusReport>& reports) {
    if (reports.empty()) return;
    std::cout << "subgroup                 index";
    for (const auto& c : reports.front().contributions)
        std::cout << "  g[" << place_label(c.place) << "]";
    std::cout << "  genus\n";
    for (const auto& rep : reports) {
        std::printf("%-24s %6s", rep.subgroup_id.c_str(), rep.index.get_str().c_str());
        for (const auto& c : rep.contributions) std::printf(" %8ld", c.contribution);
        std::printf(" %6ld\n", rep.genus);
    }
}

json verdict_json(const SieveVerdict& v) {
    json j;
    j["c"] = rational_str(v.c);
    j["verdict"] = v.tag == VerdictTag::CertifiedGeneric     ? "CertifiedGeneric"
                   : v.tag == VerdictTag::DiscriminantZero   ? "DiscriminantZero"
                                                             : "CandidateExceptional";
    j["primes_consumed"] = v.primes_consumed;
    j["catalog_status"] = v.catalog_status;
    json wit = json::array();
    for (const auto& w : v.witnesses)
        wit.push_back({{"subgroup", w.subgroup_id}, {"prime", w.prime}, {"pattern", w.pattern}});
    j["witnesses"] = std::move(wit);
    if (!v.surviving_ids.empty()) j["surviving"] = v.surviving_ids;
    return j;
}

int cmd_phi(const RunConfig& cfg) {
    DynatomicInstance inst = build_dynatomic(cfg.n);
    json j = report_header(cfg);
    j["n"] = cfg.n;
    j["degree_x"] = inst.D;
    j["r"] = inst.r;
    json coeffs = json::array();
    for (int k = 0; k <= inst.poly.degree_x(); ++k) {
        json col = json::array();
        const IntPoly& c = inst.poly.coeff_x(k);
        for (int t = 0; t <= c.degree(); ++t) col.push_back(c.coeff(t).get_str());
        coeffs.push_back(std::move(col));
    }
    j["coefficients_x_then_t"] = std::move(coeffs);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_group_info(const RunConfig& cfg) {
    WreathParams params = dynatomic_params(cfg.n);
    GeneratedGroup W = wreath_group(params);
    json j = report_header(cfg);
    j["n"] = cfg.n;
    j["D"] = params.D;
    j["r"] = params.r;
    j["order"] = W.order().get_str();
    j["sigma"] = to_cycle_string(sigma(params));
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_catalog_verify(const RunConfig& cfg) {
    Catalog cat = catalog_for(cfg);
    auto entries = validate(cat);
    json j = report_header(cfg);
    j["n"] = cat.n;
    j["status"] = cat.status;
    j["specs"] = cat.specs.size();
    json checks = json::array();
    bool all_ok = true;
    for (const auto& e : entries) {
        checks.push_back(
            {{"subgroup", e.spec_id}, {"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
        all_ok = all_ok && e.passed;
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = all_ok;
    std::cout << j.dump() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_catalog_dump(const RunConfig& cfg, const std::string& out_path) {
    Catalog cat = bundled_catalog(cfg.n);
    if (out_path.empty())
        std::cout << render_catalog(cat);
    else
        save_catalog(cat, out_path);
    return 0;
}

int cmd_genus(const RunConfig& cfg, const std::string& subgroup_id) {
    Catalog cat = catalog_for(cfg);
    InertiaSystem system = inertia_system(cat.n);
    std::vector<GenusReport> reports;
    if (!subgroup_id.empty()) {
        for (const auto& spec : cat.specs)
            if (spec.id == subgroup_id)
                reports.push_back(genus_of(spec, system, cfg.coset_limit));
        if (reports.empty()) throw ValidationError("no subgroup with id " + subgroup_id);
    } else {
        reports = genus_survey(cat, system, cfg.coset_limit);
    }
    if (cfg.table) {
        print_genus_table(reports);
        return 0;
    }
    json j = report_header(cfg);
    j["n"] = cat.n;
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(genus_report_json(rep));
    j["reports"] = std::move(arr);
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    Catalog cat = catalog_for(cfg);
    auto reports = bound_survey(cat, cfg.experimental_even);
    json j = report_header(cfg);
    j["n"] = cat.n;
    json arr = json::array();
    BigInt min_bound;
    bool first = true;
    for (const auto& rep : reports) {
        json divs = json::array();
        for (const auto& d : rep.divisors)
            divs.push_back({{"d", d.d},
                            {"u", rational_str(d.u)},
                            {"g_prime", d.g_prime.get_str()}});
        arr.push_back({{"subgroup", rep.subgroup_id},
                       {"index", rep.index.get_str()},
                       {"divisors", std::move(divs)},
                       {"lower_bound", rep.lower_bound.get_str()}});
        if (first || rep.lower_bound < min_bound) min_bound = rep.lower_bound;
        first = false;
    }
    j["reports"] = std::move(arr);
    if (!first) j["minimum_lower_bound"] = min_bound.get_str();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_density(const RunConfig& cfg) {
    DensityResult res = density_T(cfg.n);
    json j = report_header(cfg);
    j["n"] = res.n;
    j["count"] = res.count.get_str();
    j["group_order"] = res.group_order.get_str();
    j["density"] = rational_str(res.density);
    j["decimal"] = res.decimal;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_sieve_certify(const RunConfig& cfg, const std::string& c_text) {
    Catalog cat = catalog_for(cfg);
    SieveContext ctx(cat.n, cat, BigInt(cfg.enum_budget), cfg.cache_dir, cfg.threads);
    SieveVerdict v = ctx.certify(parse_rational(c_text), cfg.prime_budget);
    json j = report_header(cfg);
    j["n"] = cat.n;
    j["result"] = verdict_json(v);
    if (!ctx.non_excludable().empty()) j["non_excludable"] = ctx.non_excludable();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_sieve_scan(const RunConfig& cfg, long height) {
    Catalog cat = catalog_for(cfg);
    SieveContext ctx(cat.n, cat, BigInt(cfg.enum_budget), cfg.cache_dir, cfg.threads);
    ScanReport rep = scan(height, ctx, cfg.prime_budget, cfg.threads);
    json j = report_header(cfg);
    j["n"] = rep.n;
    j["height"] = rep.height;
    j["prime_budget"] = rep.prime_budget;
    j["catalog_status"] = rep.catalog_status;
    j["values_scanned"] = rep.verdicts.size();
    json cand = json::array(), disc = json::array();
    for (const auto& c : rep.candidate_exceptional) cand.push_back(rational_str(c));
    for (const auto& c : rep.discriminant_zero) disc.push_back(rational_str(c));
    j["candidate_exceptional"] = std::move(cand);
    j["discriminant_zero"] = std::move(disc);
    json survivors = json::object();
    for (const auto& v : rep.verdicts)
        if (v.tag == VerdictTag::CandidateExceptional) survivors[rational_str(v.c)] = v.surviving_ids;
    j["surviving_by_candidate"] = std::move(survivors);
    if (!ctx.non_excludable().empty()) j["non_excludable"] = ctx.non_excludable();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_reproduce(const RunConfig& cfg) {
    const dyngal_expected::Expected* exp = nullptr;
    for (const auto& e : dyngal_expected::expected_tables())
        if (e.n == cfg.n) exp = &e;
    if (!exp) throw UnsupportedN("reproduce-paper supports n in {5, 6, 7}");

    int failures = 0;
    json results = json::array();
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        results.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
        if (!ok) ++failures;
        std::cerr << (ok ? "ok   " : "FAIL ") << name << (detail.empty() ? "" : "  " + detail)
                  << "\n";
    };

    DynatomicInstance inst = build_dynatomic(cfg.n);
    check("degree", inst.D == exp->degree && inst.r == exp->r,
          "D=" + std::to_string(inst.D) + " r=" + std::to_string(inst.r));

    {
        std::vector<long> deltas;
        for (const auto& pc : place_classes(cfg.n))
            if (!pc.at_infinity) deltas.push_back(pc.multiplicity);
        check("delta_degrees", deltas == exp->delta_degrees, "");
    }
    check("e_n", compute_e_n(cfg.n) == exp->e_n, "e=" + std::to_string(compute_e_n(cfg.n)));

    GeneratedGroup W = wreath_group(inst.params);
    check("group_order", W.order().get_str() == exp->group_order, W.order().get_str());

    Catalog cat = catalog_for(cfg);
    check("catalog_size", cat.specs.size() == exp->catalog_size,
          std::to_string(cat.specs.size()) + " classes");
    {
        bool ok = true;
        for (const auto& e : validate(cat)) ok = ok && e.passed;
        check("catalog_valid", ok, "");
    }
    if (!exp->catalog_indices_small.empty()) {
        std::multiset<long> got, want(exp->catalog_indices_small.begin(),
                                      exp->catalog_indices_small.end());
        for (const auto& spec : cat.specs) {
            GeneratedGroup H = group_of(spec, inst.params);
            got.insert(mpz_get_si(BigInt(W.order() / H.order()).get_mpz_t()));
        }
        check("catalog_indices", got == want, "");
    }

    {
        WreathParams p = inst.params;
        check("theta_size", static_cast<long>(theta_set(p).size()) == exp->theta_size,
              std::to_string(theta_set(p).size()));
        check("lambda_size", static_cast<long>(lambda_set(p).size()) == exp->lambda_size,
              std::to_string(lambda_set(p).size()));
    }

    if (!exp->survey.empty()) {
        InertiaSystem system = inertia_system(cfg.n);
        auto reports = genus_survey(cat, system, cfg.coset_limit);
        std::multiset<std::string> got, want;
        auto row_key = [](long index, const std::vector<long>& vals, long genus) {
            std::string k = std::to_string(index) + ":";
            for (long v : vals) k += std::to_string(v) + ",";
            return k + ":" + std::to_string(genus);
        };
        for (const auto& rep : reports) {
            std::vector<long> vals;
            for (const auto& c : rep.contributions)
                vals.push_back(exp->survey_uses_excess ? c.excess : c.contribution);
            got.insert(row_key(mpz_get_si(rep.index.get_mpz_t()), vals, rep.genus));
        }
        for (const auto& row : exp->survey) want.insert(row_key(row.index, row.values, row.genus));
        check("genus_survey", got == want, std::to_string(reports.size()) + " rows");
    }

    if (exp->min_lower_bound >= 0) {
        auto reports = bound_survey(cat, cfg.experimental_even);
        BigInt minb = reports.front().lower_bound;
        for (const auto& r : reports)
            if (r.lower_bound < minb) minb = r.lower_bound;
        check("min_lower_bound", minb == BigInt(exp->min_lower_bound), minb.get_str());
    }

    DensityResult res = density_T(cfg.n);
    if (!exp->density_fraction.empty())
        check("density_fraction", rational_str(res.density) == exp->density_fraction,
              rational_str(res.density));
    check("density_decimal", res.decimal == exp->density_decimal, res.decimal);

    json j = report_header(cfg);
    j["n"] = cfg.n;
    j["checks"] = std::move(results);
    j["failures"] = failures;
    std::cout << j.dump() << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynatomic Galois group computations"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("DYNGAL_CACHE")) cfg.cache_dir = env;
    cfg.threads = static_cast<int>(std::thread::hardware_concurrency());
    if (cfg.threads < 1) cfg.threads = 1;

    app.add_option("--threads", cfg.threads, "worker threads");
    app.add_option("--cache-dir", cfg.cache_dir, "pattern-set cache directory");
    app.add_option("--coset-limit", cfg.coset_limit, "maximum coset-space size");
    app.add_option("--budget", cfg.enum_budget, "element enumeration budget");

    auto* phi = app.add_subcommand("phi", "print the dynatomic polynomial");
    phi->add_option("--n", cfg.n, "period")->required();

    auto* ginfo = app.add_subcommand("group-info", "wreath group parameters and order");
    ginfo->add_option("--n", cfg.n, "period")->required();

    auto* catalog = app.add_subcommand("catalog", "subgroup catalog operations");
    catalog->require_subcommand(1);
    auto* cverify = catalog->add_subcommand("verify", "validate a catalog");
    cverify->add_option("--n", cfg.n, "period (bundled catalog)");
    cverify->add_option("--file", cfg.catalog_path, "catalog file");
    std::string dump_out;
    auto* cdump = catalog->add_subcommand("dump", "write a bundled catalog");
    cdump->add_option("--n", cfg.n, "period")->required();
    cdump->add_option("--out", dump_out, "output path (stdout if omitted)");

    std::string subgroup_id;
    auto* genus = app.add_subcommand("genus", "exact genera of fixed fields");
    genus->add_option("--n", cfg.n, "period")->required();
    genus->add_option("--catalog", cfg.catalog_path, "catalog file");
    genus->add_option("--subgroup", subgroup_id, "restrict to one subgroup id");
    genus->add_flag("--table", cfg.table, "human-readable table");

    auto* bounds = app.add_subcommand("bounds", "genus lower bounds");
    bounds->add_option("--n", cfg.n, "period")->required();
    bounds->add_option("--catalog", cfg.catalog_path, "catalog file");
    bounds->add_flag("--experimental-even", cfg.experimental_even,
                     "enable the even-n d=n variant");

    auto* density = app.add_subcommand("density", "exact density of primes without periodic points");
    density->add_option("--n", cfg.n, "period")->required();

    auto* sieve = app.add_subcommand("sieve", "specialization analysis");
    sieve->require_subcommand(1);
    std::string c_text;
    auto* scertify = sieve->add_subcommand("certify", "classify a single rational");
    scertify->add_option("--n", cfg.n, "period")->required();
    scertify->add_option("--c", c_text, "rational value a/b")->required();
    scertify->add_option("--primes", cfg.prime_budget, "good-prime budget");
    scertify->add_option("--catalog", cfg.catalog_path, "catalog file");
    long height = 1;
    auto* sscan = sieve->add_subcommand("scan", "classify all rationals up to a height");
    sscan->add_option("--n", cfg.n, "period")->required();
    sscan->add_option("--height", height, "height bound")->required();
    sscan->add_option("--primes", cfg.prime_budget, "good-prime budget");
    sscan->add_option("--catalog", cfg.catalog_path, "catalog file");

    auto* repro = app.add_subcommand("reproduce-paper", "recompute and diff the published values");
    repro->add_option("--n", cfg.n, "period")->required();
    repro->add_flag("--experimental-even", cfg.experimental_even,
                    "enable the even-n bound variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (phi->parsed()) return cmd_phi(cfg);
        if (ginfo->parsed()) return cmd_group_info(cfg);
        if (cverify->parsed()) return cmd_catalog_verify(cfg);
        if (cdump->parsed()) return cmd_catalog_dump(cfg, dump_out);
        if (genus->parsed()) return cmd_genus(cfg, subgroup_id);
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (density->parsed()) return cmd_density(cfg);
        if (scertify->parsed()) return cmd_sieve_certify(cfg, c_text);
        if (sscan->parsed()) return cmd_sieve_scan(cfg, height);
        if (repro->parsed()) return cmd_reproduce(cfg);
    } catch (const ParseError& e) {
        json err{{"error", {{"type", "parse"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        json err{{"error", {{"type", "validation"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
