// Command-line surface for the exact pro-p filtration toolkit.
//
// Subcommands: series, dims, hall, mobius, pgroup, count, verify.
// Exit codes: 0 success, 2 usage error, 1 computation/contract error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zfilt/checks.hpp"
#include "zfilt/dims.hpp"
#include "zfilt/errors.hpp"
#include "zfilt/extcount.hpp"
#include "zfilt/family.hpp"
#include "zfilt/group.hpp"
#include "zfilt/hall.hpp"
#include "zfilt/localqp.hpp"
#include "zfilt/poset.hpp"

using zfilt::Integer;
using json = nlohmann::ordered_json;

namespace {

constexpr int kDefaultOrderCap = 64;

// ---------------------------------------------------------------------------
// Structured output: one record per invocation, rendered as a human table,
// a JSON object, or CSV.  All numbers are decimal strings (no precision loss).

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> provenance;

    void param(const std::string& k, const std::string& v) { parameters.emplace_back(k, v); }
    void param(const std::string& k, long v) { param(k, std::to_string(v)); }
    void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
    void result(const std::string& k, const Integer& v) { result(k, v.get_str()); }
    void result(const std::string& k, const zfilt::Rational& v) { result(k, v.get_str()); }
    void note(const std::string& s) { provenance.push_back(s); }
};

std::string join_csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const OutputRecord& rec, bool as_json, bool as_csv) {
    if (as_json) {
        json j;
        j["command"] = rec.command;
        json params = json::object();
        for (auto& [k, v] : rec.parameters) params[k] = v;
        j["parameters"] = params;
        json results = json::array();
        for (auto& [k, v] : rec.results) results.push_back({{"name", k}, {"value", v}});
        j["results"] = results;
        j["provenance"] = rec.provenance;
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (as_csv) {
        std::cout << "name,value\n";
        for (auto& [k, v] : rec.results)
            std::cout << join_csv_escape(k) << "," << join_csv_escape(v) << "\n";
        return;
    }
    std::cout << rec.command << "\n";
    for (auto& [k, v] : rec.parameters) std::cout << "  " << k << " = " << v << "\n";
    for (auto& [k, v] : rec.results) std::cout << "  " << k << ": " << v << "\n";
    for (auto& s : rec.provenance) std::cout << "  # " << s << "\n";
}

std::string bracket_list(const std::vector<Integer>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string bracket_list(const std::vector<zfilt::Rational>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct FamilyOptions {
    std::string family = "free";
    int rank = 2;
    int p = 2;
    int copies = 2;
    std::string rcase = "r1";
    int q = 0;
    std::string f = "2";
    std::vector<int> demushkin_ranks;
    int free_rank = 0;

    void attach(CLI::App* app) {
        app->add_option("--family", family,
                        "free | demushkin | cyclic-prod | superpyth | mixed | cyclic-free")
            ->required();
        app->add_option("--rank,-d", rank, "generator count d");
        app->add_option("--p", p, "the prime p")->required();
        app->add_option("--copies", copies, "number of C_p factors (cyclic-prod)");
        app->add_option("--case", rcase, "relation case: r1 | r2 | r3 | r4 (demushkin)");
        app->add_option("--q", q, "q-invariant, a p-power (demushkin; default p)");
        app->add_option("--f", f, "f-invariant: integer >= 2 or 'inf' (demushkin)");
        app->add_option("--demushkin-ranks", demushkin_ranks,
                        "component ranks for the mixed free product");
        app->add_option("--free-rank", free_rank, "free rank (mixed / cyclic-free)");
    }

    zfilt::GroupFamily build() const {
        using namespace zfilt;
        if (family == "free") return FreeProP{rank};
        if (family == "demushkin") {
            DemushkinCase c;
            if (rcase == "r1") c = DemushkinCase::r1;
            else if (rcase == "r2") c = DemushkinCase::r2;
            else if (rcase == "r3") c = DemushkinCase::r3;
            else if (rcase == "r4") c = DemushkinCase::r4;
            else throw contract_error("unknown relation case: " + rcase);
            FExponent fe = f == "inf" ? FExponent::inf() : FExponent::of(std::stoi(f));
            return Demushkin{rank, c, q == 0 ? p : q, fe};
        }
        if (family == "cyclic-prod") return FreeProdCyclicP{p, copies};
        if (family == "superpyth") return SuperPyth{rank};
        if (family == "mixed") return MixedFreeProd{demushkin_ranks, free_rank};
        if (family == "cyclic-free") return CyclicPFree{p, free_rank};
        throw contract_error("unknown family: " + family);
    }
};

struct GroupOptions {
    std::string builtin;
    std::vector<int> abelian_orders;
    std::vector<int> gendih_orders;

    void attach(CLI::App* app) {
        app->add_option("--group", builtin, "built-in group: d4 | u3f3 | u4f2");
        app->add_option("--abelian", abelian_orders,
                        "direct product of cyclic groups of these orders");
        app->add_option("--gendih", gendih_orders,
                        "generalized dihedral group over these cyclic orders");
    }

    zfilt::FiniteGroup build() const {
        int given = (!builtin.empty() ? 1 : 0) + (abelian_orders.empty() ? 0 : 1) +
                    (gendih_orders.empty() ? 0 : 1);
        if (given != 1)
            throw zfilt::contract_error(
                "select exactly one group via --group, --abelian, or --gendih");
        if (!abelian_orders.empty()) return zfilt::FiniteGroup::abelian(abelian_orders);
        if (!gendih_orders.empty())
            return zfilt::FiniteGroup::generalized_dihedral(gendih_orders);
        if (builtin == "d4") return zfilt::FiniteGroup::generalized_dihedral({4});
        if (builtin == "u3f2") return zfilt::FiniteGroup::unipotent(3, 2);
        if (builtin == "u3f3") return zfilt::FiniteGroup::unipotent(3, 3);
        if (builtin == "u4f2") return zfilt::FiniteGroup::unipotent(4, 2);
        throw zfilt::contract_error("unknown built-in group: " + builtin);
    }

    std::string describe() const {
        if (!builtin.empty()) return builtin;
        auto join = [](const std::vector<int>& v, const char* label) {
            std::string s = label;
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "(") + std::to_string(v[i]);
            return s + ")";
        };
        if (!abelian_orders.empty()) return join(abelian_orders, "abelian");
        return join(gendih_orders, "gendih");
    }
};

void check_order_cap(int order, bool unsafe) {
    if (order > kDefaultOrderCap && !unsafe)
        throw CLI::ValidationError(
            "--upto", "truncation orders above " + std::to_string(kDefaultOrderCap) +
                          " need an explicit --unsafe-order");
    if (order < 1) throw CLI::ValidationError("--upto", "order must be >= 1");
}

int validated_worker_count() {
    const char* env = std::getenv("ZFILT_WORKERS");
    if (env == nullptr || *env == '\0')
        return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw zfilt::contract_error("ZFILT_WORKERS must be an integer >= 1");
    return static_cast<int>(v);
}

// ---------------------------------------------------------------------------

struct Cli {
    bool as_json = false;
    bool as_csv = false;
    bool unsafe_order = false;

    // series / dims
    FamilyOptions fam_series, fam_dims;
    int upto_series = 10, upto_dims = 10;

    // hall
    int hall_rank = 2, hall_weight = 1, hall_p = 0;
    bool hall_list = false;

    // mobius / pgroup
    GroupOptions grp_mobius, grp_pgroup;
    int mobius_p = 2, pgroup_p = 2, pgroup_upto = 8;

    // count
    struct {
        GroupOptions group;
        int p = 2, n = 1;
    } shaf;
    struct {
        GroupOptions group;
        FamilyOptions family;  // only the demushkin knobs are used
        int p = 2, n = 1, q = 2;
        std::string rcase = "r2", f = "2";
        bool free_case = false;
    } yama;
    struct {
        int p = 2, n = 1, q = 2;
    } u3;
    int sap_n = 2;
    long d4_p = 2;

    bool verify_all = true;
};

void run_series(const Cli& cli, OutputRecord& rec) {
    check_order_cap(cli.upto_series, cli.unsafe_order);
    auto fam = cli.fam_series.build();
    auto P = zfilt::family_series(fam, cli.fam_series.p, cli.upto_series);
    rec.param("family", zfilt::family_name(fam));
    rec.param("p", cli.fam_series.p);
    rec.param("upto", cli.upto_series);
    rec.result("series", P.str());
    rec.result("coefficients", bracket_list(P.coeffs()));
    rec.note("Hilbert series of the graded algebra attached to the filtration");
}

void run_dims(const Cli& cli, OutputRecord& rec) {
    check_order_cap(cli.upto_dims, cli.unsafe_order);
    auto fam = cli.fam_dims.build();
    const int p = cli.fam_dims.p, N = cli.upto_dims;
    auto table = zfilt::dimension_table(zfilt::family_series(fam, p, N), p, N, fam);
    rec.param("family", zfilt::family_name(fam));
    rec.param("p", p);
    rec.param("upto", N);
    rec.result("b", bracket_list(table.b));
    rec.result("w", bracket_list(table.w));
    rec.result("c", bracket_list(table.c));
    rec.note("b = log coefficients, w = Mobius transform, c = filtration dimensions");
}

void run_hall(const Cli& cli, OutputRecord& rec) {
    rec.param("rank", cli.hall_rank);
    rec.param("weight", cli.hall_weight);
    if (cli.hall_p == 0) {
        rec.result("count", zfilt::hall_count(cli.hall_rank, cli.hall_weight));
        if (cli.hall_list) {
            auto basis = zfilt::hall_basis(cli.hall_rank, cli.hall_weight);
            for (auto& t : basis) rec.result("term", t.str());
        }
        rec.note("basic commutators of the given weight (Hall family)");
        return;
    }
    rec.param("p", cli.hall_p);
    auto basis = zfilt::zassenhaus_basis(cli.hall_rank, cli.hall_p, cli.hall_weight);
    rec.result("count", Integer(static_cast<long>(basis.size())));
    if (cli.hall_list)
        for (auto& [t, e] : basis) rec.result("term", t.str() + "^" + e.get_str());
    rec.note("graded basis with p-power multiplicities for the restricted filtration");
}

void run_mobius(const Cli& cli, OutputRecord& rec) {
    auto G = cli.grp_mobius.build();
    rec.param("group", cli.grp_mobius.describe());
    rec.param("order", G.size());
    auto lat = zfilt::subgroup_lattice(G);
    auto mu = zfilt::subgroup_mobius(lat);
    rec.result("subgroups", Integer(static_cast<long>(lat.subgroups.size())));
    for (size_t i = 0; i < lat.subgroups.size(); ++i)
        rec.result("mu(H" + std::to_string(i) + ", G) [|H|=" +
                       std::to_string(lat.subgroups[i].order()) + "]",
                   mu[i]);
    rec.note("Mobius function on the full subgroup lattice");
}

void run_pgroup(const Cli& cli, OutputRecord& rec) {
    check_order_cap(cli.pgroup_upto, cli.unsafe_order);
    auto G = cli.grp_pgroup.build();
    const int p = cli.pgroup_p;
    rec.param("group", cli.grp_pgroup.describe());
    rec.param("p", p);
    rec.param("order", G.size());
    auto chain = zfilt::zassenhaus_chain(G, p, cli.pgroup_upto);
    auto dims = zfilt::chain_dimensions(G, chain, p);
    std::vector<Integer> orders, dim_ints;
    for (auto& H : chain) orders.emplace_back(H.order());
    for (int d : dims) dim_ints.emplace_back(d);
    rec.result("chain orders", bracket_list(orders));
    rec.result("dimensions", bracket_list(dim_ints));
    rec.result("frattini order", Integer(zfilt::frattini(G, p).order()));
    rec.result("automorphisms", zfilt::automorphism_count(G));
    rec.note("descending filtration via p-th powers and commutators");
}

void run_count_shaf(const Cli& cli, OutputRecord& rec) {
    auto G = cli.shaf.group.build();
    rec.param("group", cli.shaf.group.describe());
    rec.param("p", cli.shaf.p);
    rec.param("n", cli.shaf.n);
    rec.result("count", zfilt::nu_shafarevich(cli.shaf.p, cli.shaf.n, G));
    rec.note("closed product formula; base field without p-th roots of unity");
}

void run_count_yama(const Cli& cli, OutputRecord& rec) {
    auto G = cli.yama.group.build();
    zfilt::LocalFieldParams prm;
    prm.p = cli.yama.p;
    prm.n = cli.yama.n;
    if (cli.yama.free_case) {
        prm.q = 0;
        prm.relation_case.reset();
    } else {
        prm.q = cli.yama.q;
        if (cli.yama.rcase == "r1") prm.relation_case = zfilt::DemushkinCase::r1;
        else if (cli.yama.rcase == "r2") prm.relation_case = zfilt::DemushkinCase::r2;
        else if (cli.yama.rcase == "r3") prm.relation_case = zfilt::DemushkinCase::r3;
        else if (cli.yama.rcase == "r4") prm.relation_case = zfilt::DemushkinCase::r4;
        else throw zfilt::contract_error("unknown relation case: " + cli.yama.rcase);
        prm.f = cli.yama.f == "inf" ? zfilt::FExponent::inf()
                                    : zfilt::FExponent::of(std::stoi(cli.yama.f));
    }
    rec.param("group", cli.yama.group.describe());
    rec.param("p", prm.p);
    rec.param("n", prm.n);
    rec.param("q", prm.q);
    if (!prm.is_free()) {
        rec.param("case", cli.yama.rcase);
        rec.result("relation", zfilt::demushkin_relation(prm).str());
    }
    rec.result("count", zfilt::nu_yamagishi(prm, G));
    rec.note("Mobius-weighted lattice sum over solution counts of the relation");
}

void run_count_u3(const Cli& cli, OutputRecord& rec) {
    rec.param("p", cli.u3.p);
    rec.param("n", cli.u3.n);
    rec.param("q", cli.u3.q);
    rec.result("count", zfilt::nu_u3(cli.u3.p, cli.u3.n, cli.u3.q));
    rec.note("unipotent 3x3 target; cross-checked against the pair-count route");
}

void run_count_sap(const Cli& cli, OutputRecord& rec) {
    rec.param("n", cli.sap_n);
    rec.result("pairs", zfilt::sap_pair_count(cli.sap_n));
    rec.result("count", zfilt::sap_d4_count(cli.sap_n));
    rec.note("rigid field with square class group of order 2^n");
}

void run_count_d4local(const Cli& cli, OutputRecord& rec) {
    rec.param("p", cli.d4_p);
    auto pairs = zfilt::d4_admissible_pairs(cli.d4_p);
    rec.result("admissible pairs", Integer(static_cast<long>(pairs.size())));
    for (auto& [a, b] : pairs) rec.result("pair", "{" + a.str() + ", " + b.str() + "}");
    rec.result("count", zfilt::d4_extension_count_qp(cli.d4_p));
    rec.note("quadratic square classes paired by the Hilbert symbol");
}

int run_verify() {
    int failures = 0;
    for (const auto& r : zfilt::run_all_checks()) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << ": " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        if (!r.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact filtration dimensions and extension counts for pro-p groups"};
    app.require_subcommand(1);
    Cli cli;
    app.add_flag("--json", cli.as_json, "emit one JSON record");
    app.add_flag("--csv", cli.as_csv, "emit CSV rows");
    app.add_flag("--unsafe-order", cli.unsafe_order,
                 "allow truncation orders above " + std::to_string(kDefaultOrderCap));

    auto* series = app.add_subcommand("series", "print a family's Hilbert series");
    cli.fam_series.attach(series);
    series->add_option("--upto", cli.upto_series, "truncation order");

    auto* dims = app.add_subcommand("dims", "print the b/w/c dimension tables");
    cli.fam_dims.attach(dims);
    dims->add_option("--upto", cli.upto_dims, "truncation order");

    auto* hall = app.add_subcommand("hall", "basic commutator bases and counts");
    hall->add_option("--rank", cli.hall_rank, "generator count")->required();
    hall->add_option("--weight", cli.hall_weight, "commutator weight")->required();
    hall->add_option("--p", cli.hall_p, "also grade by p-powers (restricted basis)");
    hall->add_flag("--list", cli.hall_list, "list the terms, one per result row");

    auto* mobius = app.add_subcommand("mobius", "subgroup Mobius tables");
    cli.grp_mobius.attach(mobius);
    mobius->add_option("--p", cli.mobius_p, "the prime p");

    auto* pgroup = app.add_subcommand("pgroup", "filtration chains of finite p-groups");
    cli.grp_pgroup.attach(pgroup);
    pgroup->add_option("--p", cli.pgroup_p, "the prime p")->required();
    pgroup->add_option("--upto", cli.pgroup_upto, "deepest filtration level");

    auto* count = app.add_subcommand("count", "extension counting");
    count->require_subcommand(1);
    auto* shaf = count->add_subcommand("shafarevich", "closed product formula");
    cli.shaf.group.attach(shaf);
    shaf->add_option("--p", cli.shaf.p)->required();
    shaf->add_option("--n", cli.shaf.n, "field degree")->required();
    auto* yama = count->add_subcommand("yamagishi", "Mobius lattice sum");
    cli.yama.group.attach(yama);
    yama->add_option("--p", cli.yama.p)->required();
    yama->add_option("--n", cli.yama.n, "field degree")->required();
    yama->add_option("--q", cli.yama.q, "q-invariant");
    yama->add_option("--case", cli.yama.rcase, "relation case: r1 | r2 | r3 | r4");
    yama->add_option("--f", cli.yama.f, "f-invariant: integer >= 2 or 'inf'");
    yama->add_flag("--free", cli.yama.free_case, "no p-th roots of unity in the base field");
    auto* u3 = count->add_subcommand("u3", "unipotent 3x3 target over F_p");
    u3->add_option("--p", cli.u3.p)->required();
    u3->add_option("--n", cli.u3.n, "field degree")->required();
    u3->add_option("--q", cli.u3.q, "q-invariant")->required();
    auto* sap = count->add_subcommand("sap", "rigid-field dihedral counts");
    sap->add_option("--n", cli.sap_n, "log2 of the square class group order")->required();
    auto* d4local = count->add_subcommand("d4-local", "dihedral extensions of Q_p");
    d4local->add_option("--p", cli.d4_p, "the prime p")->required();

    auto* verify = app.add_subcommand("verify", "run the full cross-validation suite");
    verify->add_flag("--all", cli.verify_all, "run every criterion (default)");

    // let the global output flags appear after any subcommand
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        validated_worker_count();
        if (verify->parsed()) return run_verify();
        OutputRecord rec;
        if (series->parsed()) {
            rec.command = "series";
            run_series(cli, rec);
        } else if (dims->parsed()) {
            rec.command = "dims";
            run_dims(cli, rec);
        } else if (hall->parsed()) {
            rec.command = "hall";
            run_hall(cli, rec);
        } else if (mobius->parsed()) {
            rec.command = "mobius";
            run_mobius(cli, rec);
        } else if (pgroup->parsed()) {
            rec.command = "pgroup";
            run_pgroup(cli, rec);
        } else if (count->parsed()) {
            rec.command = "count";
            if (shaf->parsed()) run_count_shaf(cli, rec);
            else if (yama->parsed()) run_count_yama(cli, rec);
            else if (u3->parsed()) run_count_u3(cli, rec);
            else if (sap->parsed()) run_count_sap(cli, rec);
            else run_count_d4local(cli, rec);
        }
        emit(rec, cli.as_json, cli.as_csv);
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
