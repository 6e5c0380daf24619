// Signed Gauss codes: the working form of the skein engines.  A diagram is a
// list of oriented components, each the cyclic sequence of crossings it passes
// through (over or under), plus per-crossing signs and a count of
// crossing-free circles.

#ifndef JAEGER_GAUSS_HPP
#define JAEGER_GAUSS_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"

namespace jaeger {

struct Visit {
    int crossing = 0;
    bool over = false;
    friend bool operator==(const Visit&, const Visit&) = default;
};

struct GaussDiagram {
    std::vector<std::vector<Visit>> components;
    std::vector<int> signs;
    int free_loops = 0;

    [[nodiscard]] int crossing_count() const { return static_cast<int>(signs.size()); }
    [[nodiscard]] int component_count() const { return static_cast<int>(components.size()) + free_loops; }
    [[nodiscard]] int writhe() const {
        int w = 0;
        for (int s : signs) w += s;
        return w;
    }
    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;
};

/// Retained crossings are numbered in vertex order; arcs of resolved vertices are
/// followed through, and erased strands are dropped.
inline GaussDiagram to_gauss(const OrientedLinkDiagram& d) {
    const LinkDiagram& base = d.base();
    const auto vs = d.vertices();
    const int n = base.crossing_count();
    GaussDiagram g;
    std::vector<int> id(n, -1);
    for (int c = 0; c < n; ++c)
        if (vs[c].crossing) {
            id[c] = static_cast<int>(g.signs.size());
            g.signs.push_back(crossing_sign(vs[c]));
        }
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (vs[c].legs[s] != Leg::Out || seen[c][s]) continue;
            std::vector<Visit> comp;
            Slot out{c, s};
            while (!seen[out.crossing][out.slot]) {
                seen[out.crossing][out.slot] = true;
                const Slot in = base.mate(out);
                const VertexState& v = vs[in.crossing];
                if (v.crossing) comp.push_back({id[in.crossing], in.slot % 2 == 1});
                out = {in.crossing, v.next_slot(in.slot)};
                if (out.slot < 0) throw DiagramError("incoherent vertex while tracing components");
            }
            if (comp.empty())
                ++g.free_loops;
            else
                g.components.push_back(std::move(comp));
        }
    for (LoopState l : d.loops())
        if (l != LoopState::Erased) ++g.free_loops;
    return g;
}

inline GaussDiagram to_gauss(const LinkDiagram& d) { return to_gauss(OrientedLinkDiagram::from_pd(d)); }

namespace detail {

struct VisitPos {
    int component, index;
};

inline std::array<VisitPos, 2> locate(const GaussDiagram& g, int c) {
    std::array<VisitPos, 2> out{};
    int k = 0;
    for (int i = 0; i < static_cast<int>(g.components.size()); ++i)
        for (int j = 0; j < static_cast<int>(g.components[i].size()); ++j)
            if (g.components[i][j].crossing == c) {
                if (k == 2) throw DiagramError("crossing visited more than twice");
                out[k++] = {i, j};
            }
    if (k != 2) throw DiagramError("crossing not visited twice");
    return out;
}

/// The cycle starting just after position j.
inline std::vector<Visit> after(const std::vector<Visit>& comp, int j) {
    std::vector<Visit> r;
    r.reserve(comp.size() - 1);
    for (std::size_t t = 1; t < comp.size(); ++t) r.push_back(comp[(j + t) % comp.size()]);
    return r;
}

/// Drops crossing c and renumbers the ones above it.
inline void remove_crossing(GaussDiagram& g, int c) {
    g.signs.erase(g.signs.begin() + c);
    for (auto& comp : g.components)
        for (auto& v : comp)
            if (v.crossing > c) --v.crossing;
}

inline void push_part(GaussDiagram& g, std::vector<Visit> part) {
    if (part.empty())
        ++g.free_loops;
    else
        g.components.push_back(std::move(part));
}

}  // namespace detail

inline GaussDiagram switched(GaussDiagram g, int c) {
    for (auto& comp : g.components)
        for (auto& v : comp)
            if (v.crossing == c) v.over = !v.over;
    g.signs[c] = -g.signs[c];
    return g;
}

/// The smoothing that respects orientations (Seifert smoothing).
inline GaussDiagram oriented_smoothing(const GaussDiagram& g, int c) {
    const auto [p, r] = detail::locate(g, c);
    GaussDiagram out;
    out.signs = g.signs;
    out.free_loops = g.free_loops;
    for (int i = 0; i < static_cast<int>(g.components.size()); ++i)
        if (i != p.component && i != r.component) out.components.push_back(g.components[i]);
    if (p.component == r.component) {
        const auto& comp = g.components[p.component];
        const int gap = r.index - p.index;
        auto cyc = detail::after(comp, p.index);
        std::vector<Visit> b(cyc.begin(), cyc.begin() + (gap - 1));
        std::vector<Visit> rest(cyc.begin() + gap, cyc.end());
        detail::push_part(out, std::move(b));
        detail::push_part(out, std::move(rest));
    } else {
        auto x = detail::after(g.components[p.component], p.index);
        auto y = detail::after(g.components[r.component], r.index);
        x.insert(x.end(), y.begin(), y.end());
        detail::push_part(out, std::move(x));
    }
    detail::remove_crossing(out, c);
    return out;
}

/// The other smoothing: one of the two strands through the crossing is reversed,
/// which flips the sign of every crossing it shares with the rest of the diagram.
inline GaussDiagram unoriented_smoothing(const GaussDiagram& g, int c) {
    const auto [p, r] = detail::locate(g, c);
    GaussDiagram out;
    out.signs = g.signs;
    out.free_loops = g.free_loops;
    for (int i = 0; i < static_cast<int>(g.components.size()); ++i)
        if (i != p.component && i != r.component) out.components.push_back(g.components[i]);
    std::vector<Visit> keep, rev;
    if (p.component == r.component) {
        const int gap = r.index - p.index;
        auto cyc = detail::after(g.components[p.component], p.index);
        rev.assign(cyc.begin(), cyc.begin() + (gap - 1));
        keep.assign(cyc.begin() + gap, cyc.end());
    } else {
        keep = detail::after(g.components[p.component], p.index);
        rev = detail::after(g.components[r.component], r.index);
    }
    std::vector<int> hits(g.signs.size(), 0);
    for (const auto& v : rev) ++hits[v.crossing];
    for (std::size_t k = 0; k < hits.size(); ++k)
        if (hits[k] == 1) out.signs[k] = -out.signs[k];
    keep.insert(keep.end(), rev.rbegin(), rev.rend());
    detail::push_part(out, std::move(keep));
    detail::remove_crossing(out, c);
    return out;
}

namespace detail {

// Lexicographically least token sequence over component order, basepoints and
// (when unoriented) directions.  Tokens: -1 opens a component; otherwise
// label*8 + over*4 + s where s = 0 on a first meeting and 1/2 for +/- on the second.
class CodeSearch {
  public:
    CodeSearch(const GaussDiagram& g, bool oriented)
        : g_(g), oriented_(oriented), label_(g.signs.size(), -1), dir_(g.components.size(), 0),
          where_(g.signs.size()) {
        for (int i = 0; i < static_cast<int>(g.components.size()); ++i)
            for (const auto& v : g.components[i]) where_[v.crossing].push_back(i);
    }

    std::vector<int> run() {
        dfs(0);
        return best_;
    }

  private:
    // False when the current prefix already sorts after the best sequence so far.
    [[nodiscard]] bool still_possible() const {
        if (best_.empty()) return true;
        return !std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<long>(cur_.size()), cur_.begin(),
                                             cur_.end());
    }

    void dfs(std::size_t placed) {
        if (placed == g_.components.size()) {
            if (best_.empty() || cur_ < best_) best_ = cur_;
            return;
        }
        for (std::size_t i = 0; i < g_.components.size(); ++i) {
            if (dir_[i] != 0) continue;
            const auto& comp = g_.components[i];
            const int m = static_cast<int>(comp.size());
            for (int d : {1, -1}) {
                if (d == -1 && oriented_) break;
                dir_[i] = d;
                for (int b = 0; b < m; ++b) {
                    const std::size_t mark = cur_.size();
                    const int saved_next = next_;
                    cur_.push_back(-1);
                    bool ok = still_possible();
                    std::vector<int> fresh;
                    for (int t = 0; t < m && ok; ++t) {
                        const Visit& v = comp[((b + d * t) % m + m) % m];
                        int tok;
                        if (label_[v.crossing] < 0) {
                            label_[v.crossing] = next_++;
                            fresh.push_back(v.crossing);
                            tok = label_[v.crossing] * 8 + (v.over ? 4 : 0);
                        } else {
                            const auto& w = where_[v.crossing];
                            const int s = g_.signs[v.crossing] * dir_[w[0]] * dir_[w[1]];
                            tok = label_[v.crossing] * 8 + (v.over ? 4 : 0) + (s > 0 ? 1 : 2);
                        }
                        cur_.push_back(tok);
                        ok = still_possible();
                    }
                    if (ok) dfs(placed + 1);
                    for (int c : fresh) label_[c] = -1;
                    next_ = saved_next;
                    cur_.resize(mark);
                }
                dir_[i] = 0;
            }
        }
    }

    const GaussDiagram& g_;
    bool oriented_;
    std::vector<int> label_;
    std::vector<int> dir_;
    std::vector<std::vector<int>> where_;
    int next_ = 0;
    std::vector<int> cur_;
    std::vector<int> best_;
};

}  // namespace detail

/// Relabeling-invariant key: least signed Gauss code over basepoints and
/// component order, and over directions too when `oriented` is false.
inline std::string canonical_code(const GaussDiagram& g, bool oriented) {
    if (g.components.empty() && g.free_loops == 0) return "empty";
    std::string s;
    for (int tok : detail::CodeSearch(g, oriented).run()) {
        if (tok < 0) {
            s += s.empty() ? "(" : ")(";
            continue;
        }
        if (s.back() != '(') s += ' ';
        s += std::to_string(tok / 8 + 1);
        s += (tok & 4) ? 'o' : 'u';
        if ((tok & 3) == 1) s += '+';
        if ((tok & 3) == 2) s += '-';
    }
    if (!s.empty()) s += ')';
    if (g.free_loops > 0) s += "L" + std::to_string(g.free_loops);
    return s;
}

/// Unoriented code of a PD diagram.
inline std::string canonical_code(const LinkDiagram& d) { return canonical_code(to_gauss(d), false); }

}  // namespace jaeger

#endif  // JAEGER_GAUSS_HPP
