// Test diagrams with frozen reference values.
//
// File format: blocks separated by blank lines, `#` starts a comment line.
//   name: trefoil
//   pd: X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]
//   components: 1
//   oracle_homfly: <polynomial text>
//   oracle_kauffman: <polynomial text>
// The HOMFLY value is for the orientation carried by the PD text.

#ifndef JAEGER_CORPUS_HPP
#define JAEGER_CORPUS_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "expansion.hpp"
#include "homfly.hpp"
#include "kauffman.hpp"

namespace jaeger {

struct CorpusEntry {
    std::string name;
    std::string pd;
    std::optional<int> components;
    std::optional<RationalFunction> oracle_homfly;
    std::optional<RationalFunction> oracle_kauffman;

    [[nodiscard]] LinkDiagram diagram() const { return LinkDiagram::parse_pd(pd); }
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    std::vector<CorpusEntry> out;
    std::optional<CorpusEntry> cur;
    int line_no = 0;
    auto flush = [&] {
        if (!cur) return;
        if (cur->name.empty()) throw ParseError("corpus: entry without name before line " + std::to_string(line_no));
        out.push_back(std::move(*cur));
        cur.reset();
    };
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') continue;
        const auto colon = t.find(':');
        if (colon == std::string::npos) throw ParseError("corpus line " + std::to_string(line_no) + ": expected 'key: value'");
        const std::string key = detail::trim(std::string_view(t).substr(0, colon));
        const std::string val = detail::trim(std::string_view(t).substr(colon + 1));
        if (!cur) cur.emplace();
        try {
            if (key == "name")
                cur->name = val;
            else if (key == "pd")
                cur->pd = val;
            else if (key == "components")
                cur->components = std::stoi(val);
            else if (key == "oracle_homfly")
                cur->oracle_homfly = RationalFunction::parse(val);
            else if (key == "oracle_kauffman")
                cur->oracle_kauffman = RationalFunction::parse(val);
            else
                throw ParseError("unknown key '" + key + "'");
        } catch (const std::exception& e) {
            throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    flush();
    return out;
}

inline std::string format_corpus(const std::vector<CorpusEntry>& entries) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : entries) {
        if (!first) os << '\n';
        first = false;
        os << "name: " << e.name << '\n' << "pd:" << (e.pd.empty() ? "" : " ") << e.pd << '\n';
        if (e.components) os << "components: " << *e.components << '\n';
        if (e.oracle_homfly) os << "oracle_homfly: " << e.oracle_homfly->to_string() << '\n';
        if (e.oracle_kauffman) os << "oracle_kauffman: " << e.oracle_kauffman->to_string() << '\n';
    }
    return os.str();
}

/// Reference values by the slow path: no memo, reverse walk.
inline CorpusEntry with_oracles(CorpusEntry e) {
    const LinkDiagram d = e.diagram();
    const SkeinOptions slow{false, Traversal::Reverse, nullptr};
    e.components = d.component_count();
    e.oracle_homfly = evaluate_homfly(OrientedLinkDiagram::from_pd(d), slow);
    e.oracle_kauffman = evaluate_kauffman(d, slow);
    return e;
}

inline const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, std::string_view name) {
    auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.name == name; });
    return it == corpus.end() ? nullptr : &*it;
}

struct CheckRow {
    std::string name;
    bool parsed = false;
    std::string error;
    bool components_ok = false;
    bool homfly_ok = false;
    bool kauffman_ok = false;
    bool identity_ok = false;
    RationalFunction homfly, kauffman, expanded;
    std::size_t states = 0;
    double seconds = 0;

    [[nodiscard]] bool passed() const { return parsed && components_ok && homfly_ok && kauffman_ok && identity_ok; }
};

struct CrossCheckReport {
    std::vector<CheckRow> rows;
    [[nodiscard]] bool passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed(); });
    }
};

/// Missing oracle fields fail the entry.
inline CheckRow check_entry(const CorpusEntry& e) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRow r;
    r.name = e.name;
    try {
        const LinkDiagram d = e.diagram();
        r.parsed = true;
        r.components_ok = e.components && *e.components == d.component_count();
        r.homfly = evaluate_homfly(OrientedLinkDiagram::from_pd(d));
        r.kauffman = evaluate_kauffman(d);
        r.homfly_ok = e.oracle_homfly && *e.oracle_homfly == r.homfly;
        r.kauffman_ok = e.oracle_kauffman && *e.oracle_kauffman == r.kauffman;
        const auto ex = expand_detailed(d, default_rule_table(Family::Dn));
        r.expanded = ex.value;
        r.states = ex.states;
        r.identity_ok = ex.value == r.kauffman;
    } catch (const std::exception& ex) {
        r.error = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline CrossCheckReport cross_check(const std::vector<CorpusEntry>& corpus, unsigned jobs = 1) {
    CrossCheckReport rep;
    rep.rows.resize(corpus.size());
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < corpus.size(); i += jobs) rep.rows[i] = check_entry(corpus[i]);
    };
    if (jobs <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    return rep;
}

}  // namespace jaeger

#endif  // JAEGER_CORPUS_HPP
