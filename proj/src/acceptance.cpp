#include "pwidth/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pwidth/altclass.hpp"
#include "pwidth/alternating.hpp"
#include "pwidth/chartab.hpp"
#include "pwidth/ctbl.hpp"
#include "pwidth/matgrp.hpp"
#include "pwidth/width.hpp"

namespace pw {

namespace {

struct check_failed : error {
    using error::error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failed(what);
}

std::vector<long long> odd_prime_divisors(std::uint64_t n) {
    std::vector<long long> ps;
    while (n % 2 == 0) n /= 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) {
            ps.push_back(static_cast<long long>(p));
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(static_cast<long long>(n));
    return ps;
}

int width_of(const FiniteGroup& G, const ClassData& cd, long long p, const std::string& name) {
    return p_width(G, cd, p, WidthMethod::both, name).width;
}

// --- the individual criteria ---------------------------------------------

std::string small_simple_base_case() {
    const auto G = realize_group(GroupSpec::parse("psl:2:8"));
    const ClassData cd(G);
    const int w3 = width_of(G, cd, 3, "PSL2(8)");
    const int w7 = width_of(G, cd, 7, "PSL2(8)");
    require(w3 == 3, "expected 3-width 3, got " + std::to_string(w3));
    require(w7 == 2, "expected 7-width 2, got " + std::to_string(w7));
    return "w3 = 3, w7 = 2";
}

std::string psl2_family_sweep() {
    std::ostringstream detail;
    for (int q : {5, 7, 9, 11, 13}) {
        const std::string spec = "psl:2:" + std::to_string(q);
        const auto G = realize_group(GroupSpec::parse(spec));
        const ClassData cd(G);
        for (long long p : odd_prime_divisors(G.size())) {
            const int w = width_of(G, cd, p, spec);
            require(w == 2, "PSL2(" + std::to_string(q) + "): expected " + std::to_string(p) +
                                "-width 2, got " + std::to_string(w));
        }
        detail << (q == 5 ? "q = " : ", ") << q;
    }
    return "width 2 for every odd prime divisor, " + detail.str();
}

std::string unitary_rank_three() {
    const auto G = realize_group(GroupSpec::parse("psu:3:5"));
    const ClassData cd(G);
    const auto t = dixon_table(G, cd, "PSU3(5)");
    const auto c3 = p_width_table(t, 3);
    require(c3.width == 3, "expected 3-width 3, got " + std::to_string(c3.width));
    bool unipotent_outside = false;
    for (const auto& name : c3.outside_square) {
        const auto idx = t.class_index(name);
        require(idx.has_value(), "unknown class in report: " + name);
        if (t.classes[*idx].element_order == 5) unipotent_outside = true;
    }
    require(unipotent_outside,
            "no order-5 class is missing from the square of the order-3 elements");
    for (long long p : {5, 7}) {
        const int w = p_width_table(t, p).width;
        require(w == 2,
                "expected " + std::to_string(p) + "-width 2, got " + std::to_string(w));
    }
    std::ostringstream detail;
    detail << "w3 = 3 (outside square:";
    for (const auto& name : c3.outside_square) detail << " " << name;
    detail << "), w5 = w7 = 2";
    return detail.str();
}

std::string linear_rank_three() {
    const auto G = realize_group(GroupSpec::parse("psl:3:3"));
    const ClassData cd(G);
    for (long long p : {3, 13}) {
        const int w = width_of(G, cd, p, "PSL3(3)");
        require(w == 2,
                "expected " + std::to_string(p) + "-width 2, got " + std::to_string(w));
    }
    return "w3 = w13 = 2";
}

std::string suzuki_squares() {
    const auto G = realize_group(GroupSpec::parse("sz8"));
    const ClassData cd(G);
    require(G.size() == 29120, "Sz(8) enumeration came out wrong");
    for (long long p : {5, 7, 13}) {
        const int w = width_of(G, cd, p, "Sz(8)");
        require(w == 2,
                "expected " + std::to_string(p) + "-width 2, got " + std::to_string(w));
    }
    std::size_t checked = 0;
    for (std::size_t c = 0; c < cd.count(); ++c) {
        if (cd.cls(c).element_order <= 2) continue;
        const auto support = support_oracle(G, cd, c, c);
        std::vector<char> hit(cd.count(), 0);
        for (std::size_t d : support) hit[d] = 1;
        for (std::size_t d = 0; d < cd.count(); ++d)
            if (d != cd.identity_class())
                require(hit[d], "square of class " + cd.cls(c).name + " misses " + cd.cls(d).name);
        ++checked;
    }
    return "w5 = w7 = w13 = 2; every nonidentity element in the square of each of the " +
           std::to_string(checked) + " classes of order > 2";
}

std::string mathieu_widths() {
    std::ostringstream detail;
    for (const std::string spec : {"m11", "m12"}) {
        const auto G = realize_group(GroupSpec::parse(spec));
        const ClassData cd(G);
        for (long long p : odd_prime_divisors(G.size())) {
            const int w = width_of(G, cd, p, spec);
            require(w == 2, spec + ": expected " + std::to_string(p) + "-width 2, got " +
                                std::to_string(w));
        }
        if (spec != "m11") detail << ", ";
        detail << spec << " (|G| = " << G.size() << ")";
    }
    return "width 2 for every odd prime divisor of " + detail.str();
}

std::string transvection_width() {
    const auto G = realize_group(GroupSpec::parse("sl:4:2"));
    const ClassData cd(G);
    const auto t = dixon_table(G, cd, "SL4(2)");

    const std::uint32_t tv = cd.class_of(G.index_of(transvection(4, 2).key()));
    const auto c5 = cd.class_by_name("5A");
    require(c5.has_value(), "no class 5A");
    require(cd.cls(*c5).element_order == 5, "class 5A has the wrong order");

    const auto sc = kappa(t, {*c5, *c5}, tv);
    require(sc.value == 0, "character path gives a nonzero structure constant");
    const auto count = count_oracle(G, cd, *c5, *c5, tv);
    require(count == 0, "counting oracle found " + std::to_string(count) + " factorizations");

    const auto cert = p_width(G, cd, 5, WidthMethod::both, "SL4(2)");
    int tv_width = 0;
    for (const auto& cw : cert.per_class)
        if (cw.class_index == tv) tv_width = cw.min_k;
    require(tv_width >= 3, "transvection class came out with width " + std::to_string(tv_width));
    return "kappa(5A,5A -> " + cd.cls(tv).name +
           ") = 0 by both paths; transvection class width = " + std::to_string(tv_width);
}

std::string constructive_witnesses() {
    for (int l = 5; l <= 99; l += 2) odd_cycle_factors(l); // verifies internally
    for (int l1 = 2; l1 <= 40; l1 += 2)
        for (int l2 = 2; l2 <= 40; l2 += 2) {
            std::vector<int> c1(static_cast<std::size_t>(l1)), c2(static_cast<std::size_t>(l2));
            std::iota(c1.begin(), c1.end(), 1);
            std::iota(c2.begin(), c2.end(), l1 + 1);
            even_pair_factors(l1 + l2, c1, c2);
        }

    const int n = 40;
    std::mt19937 rng(0xC0DE);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        Permutation h(std::move(img));
        if (!h.is_even()) {
            auto im = h.images0();
            std::swap(im[0], im[1]);
            h = Permutation(std::move(im));
        }
        w3_witness(h); // verifies internally
    }

    for (int deg = 5; deg <= 9; ++deg) {
        const auto G = realize_group(GroupSpec::parse("an:" + std::to_string(deg)));
        const ClassData cd(G);
        const auto cert = p_width(G, cd, 3, WidthMethod::counting, "A" + std::to_string(deg));
        require(cert.width <= 2, "A" + std::to_string(deg) + " has an element of 3-width " +
                                     std::to_string(cert.width));
    }
    return "48 single-cycle splits, 400 cycle pairs, 1000 random elements of A40, "
           "exhaustive search in A5..A9: all witnesses valid, 3-width <= 2 throughout";
}

std::string order5_width_exactly_three() {
    std::ostringstream detail;
    for (int n : {8, 9}) {
        const auto G = realize_group(GroupSpec::parse("an:" + std::to_string(n)));
        const ClassData cd(G);
        const auto pc = ip_power_cover(G, cd, 5);
        require(!pc.square_covers,
                "A" + std::to_string(n) + ": products of two order-5 elements already cover");
        require(pc.cube_covers,
                "A" + std::to_string(n) + ": products of three order-5 elements do not cover");
        detail << (n == 8 ? "" : ", ") << "A" << n;
    }
    return detail.str() + ": order-5 squares fall short, cubes cover";
}

std::string cube_predicate_soundness() {
    std::size_t predicted = 0, total = 0;
    for (int n = 5; n <= 10; ++n) {
        const auto G = realize_group(GroupSpec::parse("an:" + std::to_string(n)));
        const ClassData cd(G);
        for (const auto& check : dvir_scan(G, cd)) {
            ++total;
            if (!check.predicted) continue;
            ++predicted;
            require(check.cube_covers, "A" + std::to_string(n) + " class " + check.class_name +
                                           ": predicted cube covering fails by brute force");
        }
    }
    return std::to_string(predicted) + " predicted classes out of " + std::to_string(total) +
           " in A5..A10, every prediction confirmed by brute force";
}

std::string oracle_equivalence_sweep() {
    const std::vector<std::string> suite = {"an:5",     "an:6",      "an:7",      "psl:2:7",
                                            "psl:2:8",  "psl:2:9",   "psl:2:11",  "psl:2:13",
                                            "psl:3:3",  "m11",       "sl:4:2"};
    std::uint64_t triples = 0;
    for (const auto& spec : suite) {
        const auto G = realize_group(GroupSpec::parse(spec));
        require(G.size() <= 20160, spec + " exceeds the sweep bound");
        const ClassData cd(G);
        const auto t = dixon_table(G, cd, spec);
        t.validate(); // exact orthogonality both ways
        const std::size_t k = cd.count();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t z = 0; z < k; ++z) {
                    // kappa asserts rationality, solution_count integrality
                    const auto sc = kappa(t, {a, b}, z);
                    const Rational predicted = solution_count(t, sc);
                    const std::uint64_t counted = count_oracle(G, cd, a, b, z);
                    require(predicted == Rational(counted),
                            spec + ": class triple (" + cd.cls(a).name + "," + cd.cls(b).name +
                                " -> " + cd.cls(z).name + ") disagrees with the oracle");
                    ++triples;
                }
    }
    return std::to_string(triples) + " class triples across " + std::to_string(suite.size()) +
           " groups: exact counts match, tables exactly orthogonal";
}

std::string threshold_evaluation() {
    const auto t5 = thresholds(5);
    require(t5.N1 == Rational(400), "N1 for p = 5 is not 400");
    require(t5.epsilon == Rational(1, 25), "epsilon for p = 5 is not 1/25");
    long long start = 400;
    // N2 for p = 5 is small enough for direct permutation construction
    require(t5.N2 < Int(100000), "N2 unexpectedly large");
    start = std::max(start, t5.N2.convert_to<long long>());
    for (int i = 1; i <= 100; ++i) {
        const long long n = start + 13 * i; // spread of sample sizes past both thresholds
        std::vector<std::vector<int>> cycles;
        for (long long c = 0; c + 5 <= n; c += 5)
            cycles.push_back({static_cast<int>(c) + 1, static_cast<int>(c) + 2,
                              static_cast<int>(c) + 3, static_cast<int>(c) + 4,
                              static_cast<int>(c) + 5});
        const auto g = Permutation::from_cycles(static_cast<int>(n), cycles);
        const auto [c1, c2] = ls_conditions(g, t5.epsilon);
        require(c1 && c2, "packed 5-cycle element fails a covering condition at n = " +
                              std::to_string(n));
    }
    std::ostringstream detail;
    detail << "N1 = 400, N2 = " << t5.N2
           << "; both covering conditions hold at 100 sampled degrees";
    return detail.str();
}

// classes outside the square of the order-p elements, for tables of groups
// beyond the enumeration bound
const std::map<std::string, std::map<long long, std::vector<std::string>>> kLargeGroupRows = {
    {"HS", {{3, {"4A", "6A"}}}},
    {"Co2", {{3, {"4A"}}}},
    {"Co3", {{3, {"2A"}}}},
    {"Fi22", {{3, {"2A", "4A", "6A", "6B", "12D"}}, {5, {"2A"}}}},
    {"Fi23", {{3, {"2A"}}, {5, {"2A"}}}},
    {"BM", {{3, {"2A"}}}},
};

std::string ingested_table_rows(const std::string& dir, bool& skipped) {
    std::vector<std::filesystem::path> files;
    if (!dir.empty() && std::filesystem::is_directory(dir))
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".ctbl") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        skipped = true;
        return "no external tables supplied";
    }
    std::ostringstream detail;
    std::size_t checked = 0;
    for (const auto& f : files) {
        const auto t = load_table(f.string());
        const auto it = kLargeGroupRows.find(t.group_name);
        if (it == kLargeGroupRows.end()) {
            detail << t.group_name << ": no reference row, ignored; ";
            continue;
        }
        for (const auto& [p, expected] : it->second) {
            auto rows = table1_report(t, p);
            auto want = expected;
            std::sort(rows.begin(), rows.end());
            std::sort(want.begin(), want.end());
            require(rows == want, t.group_name + " at p = " + std::to_string(p) +
                                      ": reported classes differ from the reference");
            detail << t.group_name << "/" << p << " ok; ";
            ++checked;
        }
    }
    if (checked == 0) {
        skipped = true;
        return "supplied tables match no reference group";
    }
    return detail.str() + std::to_string(checked) + " rows reproduced";
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    struct Entry {
        std::string title;
        std::function<std::string(bool&)> run;
    };
    auto plain = [](std::string (*f)()) {
        return [f](bool&) { return f(); };
    };
    const std::vector<Entry> entries = {
        {"3-width and 7-width of PSL2(8)", plain(small_simple_base_case)},
        {"odd-prime widths of PSL2(q), q in {5,7,9,11,13}", plain(psl2_family_sweep)},
        {"3-, 5- and 7-width of PSU3(5)", plain(unitary_rank_three)},
        {"3- and 13-width of PSL3(3)", plain(linear_rank_three)},
        {"Sz(8) widths and class-square covering", plain(suzuki_squares)},
        {"M11 and M12 odd-prime widths", plain(mathieu_widths)},
        {"SL4(2) transvection class needs three order-5 factors", plain(transvection_width)},
        {"constructive order-3 factorizations", plain(constructive_witnesses)},
        {"order-5 width of A8 and A9 is exactly three", plain(order5_width_exactly_three)},
        {"cube-covering predicate soundness up to A10", plain(cube_predicate_soundness)},
        {"character and counting oracles agree on all class triples",
         plain(oracle_equivalence_sweep)},
        {"numeric thresholds and packed-cycle covering conditions", plain(threshold_evaluation)},
        {"externally supplied tables: classes outside the order-p square",
         [&opt](bool& skipped) { return ingested_table_rows(opt.ingested_dir, skipped); }},
    };

    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CriterionResult r;
        r.number = static_cast<int>(i) + 1;
        r.title = entries[i].title;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = entries[i].run(r.skipped);
            r.passed = !r.skipped;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all_ok = true;
    for (const auto& r : results) {
        const char* status = r.skipped ? "skip" : (r.passed ? "pass" : "FAIL");
        if (!r.passed && !r.skipped) all_ok = false;
        std::ostringstream secs;
        secs.precision(1);
        secs << std::fixed << r.seconds;
        out << "criterion " << r.number << ": " << status << " (" << secs.str() << "s) "
            << r.title << " -- " << r.detail << "\n";
    }
    out << (all_ok ? "all criteria satisfied\n" : "FAILURES present\n");
    return all_ok;
}

} // namespace pw
