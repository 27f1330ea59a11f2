#include "pwidth/ctbl.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pw {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw error("line " + std::to_string(line_no) + ": " + what);
}

Rational parse_rational(const std::string& s, std::size_t line_no) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(line_no, "bad rational '" + s + "'");
    }
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Cyclotomic parse_entry(const std::string& s, std::size_t line_no) {
    const auto at = s.find('@');
    if (at == std::string::npos) fail(line_no, "entry lacks '@conductor': '" + s + "'");
    unsigned d = 0;
    try {
        d = static_cast<unsigned>(std::stoul(s.substr(at + 1)));
    } catch (const std::exception&) {
        fail(line_no, "bad conductor in '" + s + "'");
    }
    if (d == 0) fail(line_no, "conductor must be positive");
    std::vector<Rational> coeffs;
    std::string part;
    std::istringstream in(s.substr(0, at));
    while (std::getline(in, part, ',')) coeffs.push_back(parse_rational(part, line_no));
    if (coeffs.size() != Cyclotomic::phi(d))
        fail(line_no, "entry over conductor " + std::to_string(d) + " needs " +
                          std::to_string(Cyclotomic::phi(d)) + " coefficients");
    return Cyclotomic::from_coefficients(d, std::move(coeffs));
}

std::string format_entry(const Cyclotomic& v) {
    std::ostringstream os;
    const auto& cs = v.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ",";
        os << format_rational(cs[i]);
    }
    os << "@" << v.conductor();
    return os.str();
}

bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.coefficients() < b.coefficients();
}

} // namespace

CharTable parse_table(const std::string& text) {
    if (text.empty()) throw error("line 1: empty table document");
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](const char* expect) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        fail(line_no + 1, std::string("unexpected end of document, expected ") + expect);
    };
    auto keyword_rest = [&](const std::string& kw) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head != kw) fail(line_no, "expected '" + kw + "', found '" + head + "'");
        std::string rest;
        std::getline(ls, rest);
        const auto start = rest.find_first_not_of(" \t");
        return start == std::string::npos ? std::string() : rest.substr(start);
    };

    CharTable t;
    next_line("group");
    t.group_name = keyword_rest("group");
    if (t.group_name.empty()) fail(line_no, "missing group name");
    next_line("order");
    try {
        t.group_order = std::stoull(keyword_rest("order"));
    } catch (const std::exception&) {
        fail(line_no, "bad order");
    }
    next_line("exponent");
    try {
        t.exponent = std::stoll(keyword_rest("exponent"));
    } catch (const std::exception&) {
        fail(line_no, "bad exponent");
    }
    next_line("classes");
    std::size_t k = 0;
    try {
        k = std::stoull(keyword_rest("classes"));
    } catch (const std::exception&) {
        fail(line_no, "bad class count");
    }
    if (k == 0) fail(line_no, "class count must be positive");

    for (std::size_t j = 0; j < k; ++j) {
        next_line("class");
        std::istringstream ls(line);
        std::string head, word;
        TableClass c;
        long long inv = -1;
        ls >> head >> c.name;
        if (head != "class" || c.name.empty()) fail(line_no, "expected 'class <name> ...'");
        bool have_size = false, have_order = false;
        while (ls >> word) {
            if (word == "size") {
                if (!(ls >> c.size)) fail(line_no, "bad size");
                have_size = true;
            } else if (word == "order") {
                if (!(ls >> c.element_order)) fail(line_no, "bad element order");
                have_order = true;
            } else if (word == "inv") {
                if (!(ls >> inv)) fail(line_no, "bad inverse index");
            } else if (word == "pow") {
                std::string pair;
                ls >> pair;
                const auto colon = pair.find(':');
                if (colon == std::string::npos) fail(line_no, "pow needs <p>:<j>");
                try {
                    c.prime_power[std::stoll(pair.substr(0, colon))] =
                        std::stoull(pair.substr(colon + 1));
                } catch (const std::exception&) {
                    fail(line_no, "bad pow entry '" + pair + "'");
                }
            } else {
                fail(line_no, "unknown class field '" + word + "'");
            }
        }
        if (!have_size || !have_order || inv < 0) fail(line_no, "class line needs size, order, inv");
        if (static_cast<std::size_t>(inv) >= k) fail(line_no, "inverse index out of range");
        c.inverse = static_cast<std::size_t>(inv);
        for (const auto& [p, target] : c.prime_power)
            if (target >= k) fail(line_no, "power-map index out of range");
        t.classes.push_back(std::move(c));
    }

    for (std::size_t i = 0; i < k; ++i) {
        next_line("irr");
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head != "irr") fail(line_no, "expected 'irr'");
        std::string rest;
        std::getline(ls, rest);
        std::vector<Cyclotomic> row;
        std::string part;
        std::istringstream parts(rest);
        while (std::getline(parts, part, ';')) {
            const auto a = part.find_first_not_of(" \t");
            if (a == std::string::npos) continue;
            const auto b = part.find_last_not_of(" \t");
            row.push_back(parse_entry(part.substr(a, b - a + 1), line_no));
        }
        if (row.size() != k)
            fail(line_no, "character row has " + std::to_string(row.size()) + " of " +
                              std::to_string(k) + " entries");
        t.values.push_back(std::move(row));
    }

    std::string extra;
    while (std::getline(in, extra))
        if (extra.find_first_not_of(" \t\r") != std::string::npos)
            fail(line_no + 1, "trailing content after the table");

    t.validate();
    return t;
}

CharTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

std::string serialize_table(const CharTable& t) {
    const std::size_t k = t.count();

    // canonical class order, with index remapping for inv and pow
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ca = t.classes[a];
        const auto& cb = t.classes[b];
        if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
        if (ca.size != cb.size) return ca.size > cb.size;
        return ca.name < cb.name;
    });
    std::vector<std::size_t> new_index(k);
    for (std::size_t i = 0; i < k; ++i) new_index[order[i]] = i;

    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& row : t.values) {
        std::vector<Cyclotomic> r;
        for (std::size_t i = 0; i < k; ++i) r.push_back(row[order[i]]);
        rows.push_back(std::move(r));
    }
    const std::size_t idc = new_index[t.identity_class()];
    std::sort(rows.begin(), rows.end(), [idc](const auto& a, const auto& b) {
        const Rational da = a[idc].rational_value(), db = b[idc].rational_value();
        if (da != db) return da < db;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[j] == b[j])) return cyclo_less(a[j], b[j]);
        return false;
    });

    std::ostringstream os;
    os << "group " << t.group_name << "\n";
    os << "order " << t.group_order << "\n";
    os << "exponent " << t.exponent << "\n";
    os << "classes " << k << "\n";
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = t.classes[order[i]];
        os << "class " << c.name << " size " << c.size << " order " << c.element_order << " inv "
           << new_index[c.inverse];
        for (const auto& [p, target] : c.prime_power) os << " pow " << p << ":" << new_index[target];
        os << "\n";
    }
    for (const auto& row : rows) {
        os << "irr ";
        for (std::size_t j = 0; j < k; ++j) {
            if (j) os << ";";
            os << format_entry(row[j]);
        }
        os << "\n";
    }
    return os.str();
}

void save_table(const CharTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write table file: " + path);
    out << serialize_table(t);
}

} // namespace pw
