#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "pwidth/acceptance.hpp"
#include "pwidth/altclass.hpp"
#include "pwidth/alternating.hpp"
#include "pwidth/chartab.hpp"
#include "pwidth/ctbl.hpp"
#include "pwidth/matgrp.hpp"
#include "pwidth/width.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

std::string rational_str(const pw::Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string certificate_line(const pw::KappaEvidence& ev) {
    std::ostringstream os;
    os << (ev.oracle_count ? "pairs(" : "kappa(");
    for (std::size_t i = 0; i < ev.tuple.size(); ++i) os << (i ? "," : "") << ev.tuple[i];
    os << " -> " << ev.target << ") = ";
    if (ev.oracle_count)
        os << *ev.oracle_count;
    else
        os << rational_str(ev.value);
    return os.str();
}

struct WidthArgs {
    std::string group_spec;
    std::string table_path;
    long long prime = 0;
    std::string method = "both";
    std::string single_class;
    int expect = -1;
    bool json_out = false;
};

int run_width(const WidthArgs& a) {
    if (a.group_spec.empty() && a.table_path.empty())
        throw pw::error("provide --group or --table");
    pw::WidthCertificate cert;
    std::uint64_t order = 0;
    if (!a.table_path.empty()) {
        if (a.method != "characters")
            throw pw::error("a table file supports --method characters only");
        const auto t = pw::load_table(a.table_path);
        order = t.group_order;
        std::optional<std::size_t> restrict_to;
        if (!a.single_class.empty()) {
            const auto idx = t.class_index(a.single_class);
            if (!idx) throw pw::error("unknown class name: " + a.single_class);
            restrict_to = *idx;
        }
        cert = pw::p_width_table(t, a.prime, restrict_to);
    } else {
        const auto spec = pw::GroupSpec::parse(a.group_spec);
        const auto G = pw::realize_group(spec);
        order = G.size();
        const pw::ClassData cd(G);
        std::optional<std::size_t> restrict_to;
        if (!a.single_class.empty()) {
            const auto idx = cd.class_by_name(a.single_class);
            if (!idx) throw pw::error("unknown class name: " + a.single_class);
            restrict_to = *idx;
        }
        const pw::WidthMethod m = a.method == "characters" ? pw::WidthMethod::characters
                                  : a.method == "counting" ? pw::WidthMethod::counting
                                                           : pw::WidthMethod::both;
        cert = pw::p_width(G, cd, a.prime, m, spec.describe(), restrict_to);
    }

    if (a.json_out) {
        json j;
        j["group"] = cert.group;
        j["order"] = order;
        j["prime"] = cert.p;
        j["method"] = a.method;
        j["width"] = cert.width;
        j["generating_classes"] = cert.generating_classes;
        j["per_class"] = json::array();
        for (const auto& cw : cert.per_class)
            j["per_class"].push_back(
                {{"class", cw.name}, {"element_order", cw.element_order}, {"width", cw.min_k}});
        j["outside_square"] = cert.outside_square;
        j["certificates"] = json::array();
        for (const auto& ev : cert.evidence) j["certificates"].push_back(certificate_line(ev));
        j["identity_convention"] = "width(1) = 0";
        if (a.expect >= 0) j["expected"] = a.expect;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << cert.group << "\n";
        std::cout << "order " << order << "\n";
        std::cout << "prime " << cert.p << "\n";
        std::cout << "method " << a.method << "\n";
        std::cout << "generating classes:";
        for (const auto& name : cert.generating_classes) std::cout << " " << name;
        std::cout << "\n";
        std::cout << "width " << cert.width << "\n";
        std::cout << "per-class widths (identity has width 0 by convention):\n";
        for (const auto& cw : cert.per_class)
            std::cout << "  " << cw.name << "  element order " << cw.element_order << "  width "
                      << cw.min_k << "\n";
        std::cout << "classes outside the square:";
        if (cert.outside_square.empty()) std::cout << " none";
        for (const auto& name : cert.outside_square) std::cout << " " << name;
        std::cout << "\n";
        std::cout << "certificates:\n";
        for (const auto& ev : cert.evidence) std::cout << "  " << certificate_line(ev) << "\n";
    }

    if (a.expect >= 0 && cert.width != a.expect) {
        std::cerr << "expectation mismatch: width " << cert.width << ", expected " << a.expect
                  << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_decompose(int n, const std::string& perm, bool json_out) {
    const auto h = pw::Permutation::parse(n, perm);
    const auto w = pw::w3_witness(h); // verified internally
    if (json_out) {
        json j;
        j["n"] = n;
        j["input"] = h.to_cycle_string();
        j["x"] = w.x.to_cycle_string();
        j["y"] = w.y.to_cycle_string();
        j["verified"] = true;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input " << h.to_cycle_string() << "\n";
        std::cout << "x = " << w.x.to_cycle_string() << "\n";
        std::cout << "y = " << w.y.to_cycle_string() << "\n";
        std::cout << "verified: x * y = input, x^3 = y^3 = 1, both factors even\n";
    }
    return kExitOk;
}

int run_kappa(const std::string& group_spec, const std::string& table_path,
              const std::vector<std::string>& class_names, const std::string& target,
              bool json_out) {
    if (group_spec.empty() && table_path.empty())
        throw pw::error("provide --group or --table");
    pw::CharTable t;
    std::optional<pw::FiniteGroup> G;
    std::optional<pw::ClassData> cd;
    std::string group_name;
    if (!table_path.empty()) {
        t = pw::load_table(table_path);
        group_name = t.group_name;
    } else {
        const auto spec = pw::GroupSpec::parse(group_spec);
        G.emplace(pw::realize_group(spec));
        cd.emplace(*G);
        t = pw::dixon_table(*G, *cd, spec.describe());
        group_name = spec.describe();
    }
    std::vector<std::size_t> classes;
    for (const auto& name : class_names) {
        const auto idx = t.class_index(name);
        if (!idx) throw pw::error("unknown class name: " + name);
        classes.push_back(*idx);
    }
    const auto tgt = t.class_index(target);
    if (!tgt) throw pw::error("unknown class name: " + target);

    const auto sc = pw::kappa(t, classes, *tgt);
    const auto count = pw::solution_count(t, sc);
    std::optional<std::uint64_t> oracle;
    if (G && classes.size() == 2)
        oracle = pw::count_oracle(*G, *cd, classes[0], classes[1], *tgt);

    std::ostringstream line;
    line << "kappa(";
    for (std::size_t i = 0; i < class_names.size(); ++i) line << (i ? "," : "") << class_names[i];
    line << " -> " << target << ") = " << rational_str(sc.value);

    if (json_out) {
        json j;
        j["group"] = group_name;
        j["classes"] = class_names;
        j["target"] = target;
        j["kappa"] = rational_str(sc.value);
        j["factorizations"] = rational_str(count);
        j["member"] = sc.value != 0;
        if (oracle) j["oracle_pairs"] = *oracle;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group " << group_name << "\n";
        std::cout << line.str() << "\n";
        std::cout << "factorizations of a fixed target element: " << rational_str(count) << "\n";
        std::cout << "target " << (sc.value != 0 ? "lies in" : "is missing from")
                  << " the class product\n";
        if (oracle) std::cout << "brute-force pair count: " << *oracle << "\n";
    }
    return kExitOk;
}

int run_chartab(const std::string& group_spec, const std::string& table_path,
                const std::string& out_path, bool json_out) {
    if (group_spec.empty() && table_path.empty())
        throw pw::error("provide --group or --table");
    pw::CharTable t;
    if (!table_path.empty()) {
        t = pw::load_table(table_path);
    } else {
        const auto spec = pw::GroupSpec::parse(group_spec);
        const auto G = pw::realize_group(spec);
        const pw::ClassData cd(G);
        t = pw::dixon_table(G, cd, spec.describe());
    }
    if (!out_path.empty()) {
        pw::save_table(t, out_path);
        std::cout << "wrote " << t.group_name << " (order " << t.group_order << ", " << t.count()
                  << " classes) to " << out_path << "\n";
        return kExitOk;
    }
    if (json_out) {
        json j;
        j["group"] = t.group_name;
        j["order"] = t.group_order;
        j["exponent"] = t.exponent;
        j["classes"] = json::array();
        for (const auto& c : t.classes) {
            json pow = json::object();
            for (const auto& [p, target] : c.prime_power)
                pow[std::to_string(p)] = t.classes[target].name;
            j["classes"].push_back({{"name", c.name},
                                    {"size", c.size},
                                    {"element_order", c.element_order},
                                    {"inverse", t.classes[c.inverse].name},
                                    {"power_map", pow}});
        }
        j["characters"] = json::array();
        for (const auto& row : t.values) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.to_string());
            j["characters"].push_back(r);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << pw::serialize_table(t);
    }
    return kExitOk;
}

int run_check_dvir(int n, bool json_out) {
    const auto G = pw::realize_group(pw::GroupSpec::parse("an:" + std::to_string(n)));
    const pw::ClassData cd(G);
    const auto checks = pw::dvir_scan(G, cd);
    bool sound = true;
    if (json_out) {
        json j;
        j["group"] = "A" + std::to_string(n);
        j["classes"] = json::array();
        for (const auto& c : checks) {
            j["classes"].push_back({{"class", c.class_name},
                                    {"cycle_type", c.cycle_type},
                                    {"predicted", c.predicted},
                                    {"cube_covers", c.cube_covers}});
            if (c.predicted && !c.cube_covers) sound = false;
        }
        j["sound"] = sound;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group A" << n << "\n";
        std::cout << "class  cycle type  predicted  cube covers\n";
        for (const auto& c : checks) {
            std::cout << "  " << c.class_name << "  (";
            for (std::size_t i = 0; i < c.cycle_type.size(); ++i)
                std::cout << (i ? "," : "") << c.cycle_type[i];
            std::cout << ")  " << (c.predicted ? "yes" : "no") << "  "
                      << (c.cube_covers ? "yes" : "no") << "\n";
            if (c.predicted && !c.cube_covers) sound = false;
        }
        std::cout << (sound ? "every prediction confirmed by brute force\n"
                            : "PREDICTION CONTRADICTED\n");
    }
    return sound ? kExitOk : kExitMismatch;
}

int run_bertram(long long p, bool json_out) {
    const auto gap = pw::bertram_gap(p);
    if (json_out) {
        json j;
        j["prime"] = p;
        j["gap"] = gap;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "degrees n where squares of order-" << p << " elements cannot cover A_n:";
        if (gap.empty()) std::cout << " none";
        for (long long n : gap) std::cout << " " << n;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_thresholds(long long p, bool json_out) {
    const auto t = pw::thresholds(p);
    if (json_out) {
        json j;
        j["prime"] = p;
        j["constructive_case"] = t.constructive_case;
        if (!t.constructive_case) {
            j["epsilon"] = rational_str(t.epsilon);
            j["N1"] = rational_str(t.N1);
            j["N2"] = t.N2.str();
        }
        std::cout << j.dump(2) << "\n";
    } else if (t.constructive_case) {
        std::cout << "p = 3: handled by the constructive order-3 machinery, width 2 for all n\n";
    } else {
        std::cout << "prime " << p << "\n";
        std::cout << "epsilon " << rational_str(t.epsilon) << "\n";
        std::cout << "N1 " << rational_str(t.N1) << "\n";
        std::cout << "N2 " << t.N2 << "\n";
    }
    return kExitOk;
}

int run_scan_artin(long long l, long long max_p, bool json_out) {
    const auto witnesses = pw::artin_scan(l, max_p);
    if (json_out) {
        json j;
        j["l"] = l;
        j["max_p"] = max_p;
        j["primes"] = json::array();
        for (const auto& w : witnesses)
            j["primes"].push_back({{"p", w.p},
                                   {"sl", w.sl.describe()},
                                   {"sp", w.sp.describe()},
                                   {"sl_enumerable", w.sl_enumerable},
                                   {"sp_enumerable", w.sp_enumerable}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "primes p <= " << max_p << " with " << l << " a primitive root:";
        for (const auto& w : witnesses) std::cout << " " << w.p;
        std::cout << "\n";
        for (const auto& w : witnesses)
            std::cout << "  p = " << w.p << ": width >= 3 witnesses " << w.sl.describe()
                      << (w.sl_enumerable ? " (enumerable)" : "") << ", " << w.sp.describe()
                      << (w.sp_enumerable ? " (enumerable)" : "") << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& ingested_dir) {
    const auto results = pw::run_acceptance({ingested_dir});
    return pw::report_acceptance(results, std::cout) ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact p-width computations for finite simple groups: the least k such that\n"
        "every element is a product of k elements of order p, certified by character-\n"
        "theoretic structure constants and brute-force counting.\n\n"
        "Group specs: an:<n>, sn:<n>, sl:<n>:<q>, sp:<n>:<q>, su:3:<q>, psl:<n>:<q>,\n"
        "psu:3:<q>, m11, m12, sz8, file:<generators.txt>. The enumeration bound can\n"
        "be overridden with $PWIDTH_MAX_ORDER."};
    app.require_subcommand(1);

    WidthArgs wa;
    auto* width = app.add_subcommand("width", "p-width of a group, with certificates");
    auto* wg = width->add_option("--group", wa.group_spec, "group spec, e.g. psl:2:8");
    auto* wt = width->add_option("--table", wa.table_path, "character table (.ctbl) file");
    wg->excludes(wt);
    width->add_option("--prime", wa.prime, "the prime p")->required();
    width->add_option("--method", wa.method, "characters | counting | both (default)")
        ->check(CLI::IsMember({"characters", "counting", "both"}));
    width->add_option("--single-class", wa.single_class,
                      "restrict the factors to one class of order-p elements");
    width->add_option("--expect", wa.expect, "exit 2 unless the width equals this value");
    width->add_flag("--json", wa.json_out, "machine-readable output");

    int dn = 0;
    std::string dperm;
    bool djson = false;
    auto* decompose =
        app.add_subcommand("decompose", "write an even permutation as a product of two "
                                        "elements of order dividing 3");
    decompose->add_option("--n", dn, "degree")->required();
    decompose->add_option("--perm", dperm, "permutation in cycle notation")->required();
    decompose->add_flag("--json", djson, "machine-readable output");

    std::string kg, ktab, ktarget;
    std::vector<std::string> kclasses;
    bool kjson = false;
    auto* ksub = app.add_subcommand("kappa", "normalised class-product structure constant");
    auto* kgo = ksub->add_option("--group", kg, "group spec");
    auto* kto = ksub->add_option("--table", ktab, "character table (.ctbl) file");
    kgo->excludes(kto);
    ksub->add_option("--class", kclasses, "factor class name (repeatable)")->required();
    ksub->add_option("--target", ktarget, "target class name")->required();
    ksub->add_flag("--json", kjson, "machine-readable output");

    std::string cg, ctab, cout_path;
    bool cjson = false;
    auto* chartab = app.add_subcommand("chartab", "exact character table, canonical text form");
    auto* cgo = chartab->add_option("--group", cg, "group spec");
    auto* cto = chartab->add_option("--table", ctab, "canonicalize an existing .ctbl file");
    cgo->excludes(cto);
    chartab->add_option("--out", cout_path, "write to a file instead of standard output");
    chartab->add_flag("--json", cjson, "machine-readable output");

    int dvn = 0;
    bool dvjson = false;
    auto* dv = app.add_subcommand("check-dvir",
                                  "cube-covering predictions vs brute force in an alternating group");
    dv->add_option("--n", dvn, "degree of the alternating group")->required();
    dv->add_flag("--json", dvjson, "machine-readable output");

    long long bp = 0;
    bool bjson = false;
    auto* bert = app.add_subcommand("bertram", "degrees where order-p squares cannot cover A_n");
    bert->add_option("--prime", bp, "the prime p")->required();
    bert->add_flag("--json", bjson, "machine-readable output");

    long long tp = 0;
    bool tjson = false;
    auto* thr = app.add_subcommand("thresholds", "asymptotic covering thresholds for A_n");
    thr->add_option("--prime", tp, "the prime p")->required();
    thr->add_flag("--json", tjson, "machine-readable output");

    long long al = 0, amax = 0;
    bool ajson = false;
    auto* artin = app.add_subcommand(
        "scan-artin", "primes with l as a primitive root, with width >= 3 witness families");
    artin->add_option("--l", al, "the base l")->required();
    artin->add_option("--max-p", amax, "scan primes up to this bound")->required();
    artin->add_flag("--json", ajson, "machine-readable output");

    std::string ingested;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_option("--include-ingested", ingested,
                       "directory of .ctbl tables for groups beyond the enumeration bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*width) return run_width(wa);
        if (*decompose) return run_decompose(dn, dperm, djson);
        if (*ksub) return run_kappa(kg, ktab, kclasses, ktarget, kjson);
        if (*chartab) return run_chartab(cg, ctab, cout_path, cjson);
        if (*dv) return run_check_dvir(dvn, dvjson);
        if (*bert) return run_bertram(bp, bjson);
        if (*thr) return run_thresholds(tp, tjson);
        if (*artin) return run_scan_artin(al, amax, ajson);
        if (*verify) return run_verify(ingested);
    } catch (const pw::bound_exceeded& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
