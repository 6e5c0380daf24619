// Helpers shared by the tests: Reidemeister pairs, small diagrams, random
// generators, and PD-level switching and smoothing written independently of
// the Gauss-code machinery the engines use.

#ifndef JAEGER_TESTS_SUPPORT_HPP
#define JAEGER_TESTS_SUPPORT_HPP

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jaeger/bundled.hpp"

namespace testsupport {

using namespace jaeger;

inline LinkDiagram braid(const std::string& text) { return from_braid_word(parse_braid(text)); }

inline RationalFunction z() { return RationalFunction(Laurent::z()); }
inline RationalFunction mono(int ea, int eq) { return RationalFunction(Laurent::monomial(1, ea, eq)); }
inline RationalFunction delta() { return (mono(1, 0) - mono(-1, 0)) / z(); }
inline RationalFunction kauffman_circle() { return (mono(2, -1) - mono(-2, 1)) / z() + RationalFunction(1); }

struct CurlPair {
    std::string name;
    LinkDiagram with_curl, without;
    int sign;
};

inline std::vector<DiagramPair> r2_pairs() {
    return {
        {"r2-unlink", braid("BR 2 : 1 -1"), braid("BR 2 :")},
        {"r2-3strand", braid("BR 3 : 1 2 -2 1"), braid("BR 3 : 1 1")},
        {"r2-trefoil", braid("BR 2 : 1 1 1 -1"), braid("BR 2 : 1 1")},
        {"r2-middle", braid("BR 3 : 2 -2 1"), braid("BR 3 : 1")},
    };
}

inline std::vector<DiagramPair> r3_pairs() {
    return {
        {"r3-positive", braid("BR 3 : 1 2 1"), braid("BR 3 : 2 1 2")},
        {"r3-negative", braid("BR 3 : -1 -2 -1"), braid("BR 3 : -2 -1 -2")},
        {"r3-mixed", braid("BR 3 : 1 2 -1"), braid("BR 3 : -2 1 2")},
        {"r3-long", braid("BR 3 : 1 2 1 2"), braid("BR 3 : 2 1 2 2")},
    };
}

inline std::vector<DiagramPair> r23_pairs() {
    auto v = r2_pairs();
    for (auto& p : r3_pairs()) v.push_back(p);
    return v;
}

inline std::vector<CurlPair> r1_pairs() {
    return {
        {"pd-curl+", LinkDiagram::parse_pd("X[1,1,2,2]"), LinkDiagram::parse_pd("Loop[1]"), 1},
        {"pd-curl-", LinkDiagram::parse_pd("X[1,2,2,1]"), LinkDiagram::parse_pd("Loop[1]"), -1},
        {"stab+", braid("BR 3 : 1 1 1 2"), braid("BR 2 : 1 1 1"), 1},
        {"stab-", braid("BR 3 : 1 1 1 -2"), braid("BR 2 : 1 1 1"), -1},
        {"stab-fig8+", braid("BR 4 : 1 -2 1 -2 3"), braid("BR 3 : 1 -2 1 -2"), 1},
        {"stab-fig8-", braid("BR 4 : 1 -2 1 -2 -3"), braid("BR 3 : 1 -2 1 -2"), -1},
    };
}

/// Components by union-find over edge labels, strands running straight through
/// crossings (slot pairs 0-2 and 1-3).
inline int traced_components(const LinkDiagram& d) {
    std::map<int, int> parent;
    auto find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : d.crossings()) {
        parent[find(c.edges[0])] = find(c.edges[2]);
        parent[find(c.edges[1])] = find(c.edges[3]);
    }
    std::set<int> roots;
    for (const auto& [k, v] : parent) roots.insert(find(k));
    return static_cast<int>(roots.size()) + d.free_loops();
}

/// Every braid word of length <= max_len on 2..max_strands strands.
inline std::vector<LinkDiagram> small_braid_closures(int max_len, int max_strands) {
    std::vector<LinkDiagram> out;
    for (int n = 2; n <= max_strands; ++n) {
        std::vector<int> gens;
        for (int i = 1; i < n; ++i) {
            gens.push_back(i);
            gens.push_back(-i);
        }
        std::vector<std::vector<int>> words{{}};
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int g : gens) {
                        auto x = w;
                        x.push_back(g);
                        next.push_back(x);
                    }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& w : words) out.push_back(from_braid_word(w, n));
    }
    return out;
}

/// All bundled diagrams plus every small braid closure with at most 3 crossings.
inline std::vector<LinkDiagram> diagrams_up_to_3() {
    std::vector<LinkDiagram> out;
    for (const auto& e : bundled_corpus())
        if (e.diagram().crossing_count() <= 3) out.push_back(e.diagram());
    for (auto& d : small_braid_closures(3, 3)) out.push_back(std::move(d));
    return out;
}

inline std::vector<int> random_word(std::mt19937& rng, int strands, int length) {
    std::uniform_int_distribution<int> gen(1, strands - 1), coin(0, 1);
    std::vector<int> w;
    for (int i = 0; i < length; ++i) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
    return w;
}

inline Laurent random_laurent(std::mt19937& rng, int terms = 4, int span = 3, int coef = 5) {
    std::uniform_int_distribution<int> e(-span, span), c(-coef, coef);
    Laurent p;
    for (int i = 0; i < terms; ++i) p.add_term(Integer(c(rng)), {e(rng), e(rng)});
    return p;
}

inline RationalFunction random_rational(std::mt19937& rng) {
    Laurent den = random_laurent(rng, 2, 2, 3);
    if (den.is_zero()) den = Laurent(1);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) den = Laurent::z().pow(2);
    return {random_laurent(rng), den};
}

/// Same diagram with edge labels permuted.
inline LinkDiagram relabeled(const LinkDiagram& d, const std::vector<int>& perm) {
    std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
    for (auto& x : xs)
        for (int& e : x.edges) e = perm[e - 1] + 1;
    return {std::move(xs), d.free_loops()};
}

/// Label set is 1..2c for parsed corpus and braid diagrams; this makes it so.
inline LinkDiagram compacted(const LinkDiagram& d) {
    std::map<int, int> ids;
    std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
    for (auto& x : xs)
        for (int& e : x.edges) e = ids.try_emplace(e, static_cast<int>(ids.size()) + 1).first->second;
    return {std::move(xs), d.free_loops()};
}

// --- PD-level local moves ------------------------------------------------------

/// The same oriented diagram with the over/under information at c exchanged:
/// slots turn by one so that slot 0 is again an under-strand end.
inline OrientedLinkDiagram switch_at(const OrientedLinkDiagram& d, int c) {
    std::vector<Crossing> xs(d.base().crossings().begin(), d.base().crossings().end());
    const auto e = xs[c].edges;
    xs[c].edges = {e[1], e[2], e[3], e[0]};
    std::vector<VertexState> vs(d.vertices().begin(), d.vertices().end());
    const auto l = vs[c].legs;
    vs[c].legs = {l[1], l[2], l[3], l[0]};
    return {std::make_shared<const LinkDiagram>(LinkDiagram(std::move(xs), d.base().free_loops())), std::move(vs),
            std::vector<LoopState>(d.loops().begin(), d.loops().end())};
}

/// Crossing c replaced by the two arcs that follow the orientation.
inline OrientedLinkDiagram oriented_smoothing_at(const OrientedLinkDiagram& d, int c) {
    std::vector<VertexState> vs(d.vertices().begin(), d.vertices().end());
    VertexState& v = vs[c];
    const int ui = v.legs[0] == Leg::In ? 0 : 2;
    const int oi = v.legs[1] == Leg::In ? 1 : 3;
    v.crossing = false;
    v.exit = {-1, -1, -1, -1};
    v.exit[ui] = static_cast<std::int8_t>((oi + 2) % 4);
    v.exit[oi] = static_cast<std::int8_t>((ui + 2) % 4);
    return {d.base_ptr(), std::move(vs), std::vector<LoopState>(d.loops().begin(), d.loops().end())};
}

/// Unoriented smoothing of crossing c joining slots {p, p+1} and {p+2, p+3}
/// (p = 0 or 1), done by merging edge labels.
inline LinkDiagram smoothing_pd(const LinkDiagram& d, int c, int p) {
    std::map<int, int> parent;
    auto find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) x = parent[x];
        return x;
    };
    const auto e = d.crossings()[c].edges;
    auto join = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[x] = y;
    };
    join(e[p], e[(p + 1) % 4]);
    join(e[(p + 2) % 4], e[(p + 3) % 4]);
    std::vector<Crossing> xs;
    std::set<int> used;
    for (int k = 0; k < d.crossing_count(); ++k) {
        if (k == c) continue;
        Crossing x = d.crossings()[k];
        for (int& l : x.edges) {
            l = find(l);
            used.insert(l);
        }
        xs.push_back(x);
    }
    // Merged labels that no longer touch a crossing are closed circles.
    int loops = d.free_loops();
    std::set<int> closed;
    for (int l : e)
        if (!used.count(find(l))) closed.insert(find(l));
    loops += static_cast<int>(closed.size());
    return {std::move(xs), loops};
}

/// Seifert smoothing position for crossing c of the PD orientation of d.
inline int seifert_pairing(const LinkDiagram& d, int c) {
    const auto o = OrientedLinkDiagram::from_pd(d);
    const auto& v = o.vertices()[c];
    const int ui = v.legs[0] == Leg::In ? 0 : 2;
    const int oi = v.legs[1] == Leg::In ? 1 : 3;
    // Seifert arcs join ui with (oi+2)%4.
    const int partner = (oi + 2) % 4;
    const int lo = std::min(ui, partner), hi = std::max(ui, partner);
    return (lo == 1 && hi == 2) || (lo == 0 && hi == 3) ? 1 : 0;
}

}  // namespace testsupport

#endif  // JAEGER_TESTS_SUPPORT_HPP
