// Link diagrams as planar 4-valent maps: PD and braid front ends, orientations,
// writhe, and the Whitney rotation number.
//
// Slot convention: the four edge ends of a crossing are listed counterclockwise;
// slots 0 and 2 carry the under-strand, slots 1 and 3 the over-strand.  In PD
// text slot 0 is the incoming end of the under-strand.

#ifndef JAEGER_DIAGRAM_HPP
#define JAEGER_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace jaeger {

class DiagramError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Crossing {
    std::array<int, 4> edges{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// One end of an edge: (crossing index, slot).
struct Slot {
    int crossing = -1;
    int slot = -1;
    friend bool operator==(const Slot&, const Slot&) = default;
};

class LinkDiagram {
  public:
    LinkDiagram() = default;

    /// Validates closedness: every edge label occurs exactly twice.
    LinkDiagram(std::vector<Crossing> crossings, int free_loops)
        : crossings_(std::move(crossings)), free_loops_(free_loops) {
        if (free_loops_ < 0) throw DiagramError("negative free loop count");
        std::map<int, std::vector<Slot>> ends;
        for (int c = 0; c < crossing_count(); ++c)
            for (int s = 0; s < 4; ++s) {
                const int e = crossings_[c].edges[s];
                if (e <= 0) throw DiagramError("edge labels must be positive, got " + std::to_string(e));
                ends[e].push_back({c, s});
            }
        mate_.assign(crossings_.size(), {});
        for (const auto& [label, where] : ends) {
            if (where.size() != 2)
                throw DiagramError("diagram is not closed: edge " + std::to_string(label) + " occurs " +
                                   std::to_string(where.size()) + " time(s)");
            mate_[where[0].crossing][where[0].slot] = where[1];
            mate_[where[1].crossing][where[1].slot] = where[0];
        }
    }

    static LinkDiagram parse_pd(std::string_view text);
    [[nodiscard]] std::string to_pd() const;

    [[nodiscard]] std::span<const Crossing> crossings() const noexcept { return crossings_; }
    [[nodiscard]] int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
    [[nodiscard]] int free_loops() const noexcept { return free_loops_; }
    [[nodiscard]] int edge_count() const noexcept { return 2 * crossing_count(); }
    [[nodiscard]] bool empty() const noexcept { return crossings_.empty() && free_loops_ == 0; }

    /// The other end of the edge attached at (c, s).
    [[nodiscard]] Slot mate(int c, int s) const { return mate_[c][s]; }
    [[nodiscard]] Slot mate(Slot x) const { return mate_[x.crossing][x.slot]; }

    /// Strand components through the crossings (free loops excluded). Each
    /// component lists the slots at which it enters a crossing, in traversal order.
    [[nodiscard]] std::vector<std::vector<Slot>> strands() const {
        std::vector<std::array<bool, 4>> seen(crossings_.size(), {false, false, false, false});
        std::vector<std::vector<Slot>> out;
        for (int c = 0; c < crossing_count(); ++c)
            for (int s : {2, 0, 1, 3}) {
                if (seen[c][s]) continue;
                std::vector<Slot> comp;
                Slot leave{c, s};
                while (!seen[leave.crossing][leave.slot]) {
                    seen[leave.crossing][leave.slot] = true;
                    Slot enter = mate(leave);
                    seen[enter.crossing][enter.slot] = true;
                    comp.push_back(enter);
                    leave = {enter.crossing, (enter.slot + 2) % 4};
                }
                out.push_back(std::move(comp));
            }
        return out;
    }

    [[nodiscard]] int component_count() const { return static_cast<int>(strands().size()) + free_loops_; }

    friend bool operator==(const LinkDiagram& x, const LinkDiagram& y) {
        return x.crossings_ == y.crossings_ && x.free_loops_ == y.free_loops_;
    }

  private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<std::array<Slot, 4>> mate_;
};

/// Tokens `X[a,b,c,d]` (and `Loop[k]` for a crossing-free circle), separated by
/// whitespace or commas.
inline LinkDiagram LinkDiagram::parse_pd(std::string_view text) {
    std::vector<Crossing> xs;
    int loops = 0;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("PD text: " + what + " at offset " + std::to_string(i));
    };
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    auto read_int = [&]() -> int {
        while (i < text.size() && text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || i - start > 9) fail("expected positive integer edge label");
        int v = std::stoi(std::string(text.substr(start, i - start)));
        if (v <= 0) fail("edge labels must be positive");
        while (i < text.size() && text[i] == ' ') ++i;
        return v;
    };
    auto expect = [&](char c) {
        if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    };
    skip();
    while (i < text.size()) {
        if (text.substr(i, 2) == "X[") {
            i += 2;
            Crossing x;
            for (int k = 0; k < 4; ++k) {
                x.edges[k] = read_int();
                if (k < 3) expect(',');
            }
            expect(']');
            xs.push_back(x);
        } else if (text.substr(i, 5) == "Loop[") {
            i += 5;
            read_int();
            expect(']');
            ++loops;
        } else {
            fail("malformed token");
        }
        skip();
    }
    return {std::move(xs), loops};
}

inline std::string LinkDiagram::to_pd() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : crossings_) {
        if (!first) os << ' ';
        os << "X[" << x.edges[0] << ',' << x.edges[1] << ',' << x.edges[2] << ',' << x.edges[3] << ']';
        first = false;
    }
    int next = 0;
    for (const auto& x : crossings_)
        for (int e : x.edges) next = std::max(next, e);
    for (int k = 0; k < free_loops_; ++k) {
        if (!first) os << ' ';
        os << "Loop[" << ++next << ']';
        first = false;
    }
    return os.str();
}

/// Disjoint union; edge labels of `y` are shifted past those of `x`.
inline LinkDiagram disjoint_union(const LinkDiagram& x, const LinkDiagram& y) {
    int shift = 0;
    for (const auto& c : x.crossings())
        for (int e : c.edges) shift = std::max(shift, e);
    std::vector<Crossing> xs(x.crossings().begin(), x.crossings().end());
    for (auto c : y.crossings()) {
        for (int& e : c.edges) e += shift;
        xs.push_back(c);
    }
    return {std::move(xs), x.free_loops() + y.free_loops()};
}

// ---------------------------------------------------------------------------
// Braids

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // ±i for σ_i^{±1}
};

/// `BR n : i1 i2 -i1 ...`
inline BraidWord parse_braid(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    BraidWord w;
    if (!(in >> tag) || tag != "BR") throw ParseError("braid text: expected 'BR'");
    if (!(in >> w.strands) || w.strands < 1) throw ParseError("braid text: expected strand count >= 1");
    std::string colon;
    if (!(in >> colon) || colon != ":") throw ParseError("braid text: expected ':' after strand count");
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("braid text: bad generator '" + tok + "'");
        }
        if (used != tok.size() || v == 0) throw ParseError("braid text: bad generator '" + tok + "'");
        w.letters.push_back(v);
    }
    return w;
}

/// Right closure of the braid; σ_i is a positive crossing between strands i and i+1
/// (the strand from lower left to upper right passes over).
inline LinkDiagram from_braid_word(std::span<const int> word, int strands) {
    if (strands < 1) throw DiagramError("braid needs at least one strand");
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 1);
    int next = strands + 1;
    std::vector<Crossing> xs;
    for (int g : word) {
        const int i = std::abs(g);
        if (g == 0 || i >= strands)
            throw DiagramError("generator " + std::to_string(g) + " out of range for " + std::to_string(strands) +
                               " strands");
        const int bl = cur[i - 1], br = cur[i];
        const int tl = next++, tr = next++;
        if (g > 0)
            xs.push_back({{br, tr, tl, bl}});
        else
            xs.push_back({{bl, br, tr, tl}});
        cur[i - 1] = tl;
        cur[i] = tr;
    }
    // Close up: the top label on each position is the bottom label of that position.
    std::map<int, int> rename;
    for (int p = 0; p < strands; ++p) rename[cur[p]] = p + 1;
    int loops = 0;
    std::vector<int> used;
    for (auto& x : xs)
        for (int& e : x.edges)
            if (auto it = rename.find(e); it != rename.end()) e = it->second;
    for (int p = 0; p < strands; ++p)
        if (cur[p] == p + 1) ++loops;
    // Relabel 1..2c consecutively along each component, in the upward direction.
    std::map<int, int> next_edge;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& e = xs[k].edges;
        next_edge[e[0]] = e[2];
        if (word[k] > 0)
            next_edge[e[3]] = e[1];
        else
            next_edge[e[1]] = e[3];
    }
    std::map<int, int> relabel;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& e = xs[k].edges;
        for (int start : {e[0], word[k] > 0 ? e[3] : e[1]})
            for (int f = start; !relabel.contains(f); f = next_edge.at(f))
                relabel.emplace(f, static_cast<int>(relabel.size()) + 1);
    }
    for (auto& x : xs)
        for (int& e : x.edges) e = relabel.at(e);
    return {std::move(xs), loops};
}

inline LinkDiagram from_braid_word(const BraidWord& w) { return from_braid_word(w.letters, w.strands); }

// ---------------------------------------------------------------------------
// Oriented and resolved diagrams

enum class Leg : std::uint8_t { In, Out, Erased };
enum class LoopState : std::uint8_t { Ccw, Cw, Erased };

/// What sits at a vertex of the planar map: either the original crossing
/// (strands go straight through, s -> s+2) or a set of non-crossing arcs
/// with `exit[in] = out`.  Legs not on any arc are erased.
struct VertexState {
    bool crossing = true;
    std::array<Leg, 4> legs{Leg::In, Leg::In, Leg::Out, Leg::Out};
    std::array<std::int8_t, 4> exit{-1, -1, -1, -1};

    [[nodiscard]] int next_slot(int in) const { return crossing ? (in + 2) % 4 : exit[in]; }

    friend bool operator==(const VertexState&, const VertexState&) = default;
};

/// Sign of an oriented crossing from the directions of its legs.
inline int crossing_sign(const VertexState& v) {
    const int under_in = v.legs[0] == Leg::In ? 0 : 2;
    const int over_in = v.legs[1] == Leg::In ? 1 : 3;
    return over_in == (under_in + 3) % 4 ? 1 : -1;
}

/// A link diagram with directions on every edge, possibly with some crossings
/// replaced by arcs or erased (the resolved diagrams of an expansion state).
/// The underlying planar map is kept for rotation numbers.
class OrientedLinkDiagram {
  public:
    OrientedLinkDiagram() : base_(std::make_shared<const LinkDiagram>()) {}
    OrientedLinkDiagram(std::shared_ptr<const LinkDiagram> base, std::vector<VertexState> vertices,
                        std::vector<LoopState> loops)
        : base_(std::move(base)), vertices_(std::move(vertices)), loops_(std::move(loops)) {
        if (static_cast<int>(vertices_.size()) != base_->crossing_count() ||
            static_cast<int>(loops_.size()) != base_->free_loops())
            throw DiagramError("orientation data does not match the diagram");
    }

    /// The orientation carried by PD text: slot 0 is the incoming under-strand.
    /// Components that never pass under run from their smallest edge label to the
    /// next one (labels consecutive along the component); with only two edges they
    /// enter their first listed crossing on the smaller label.  Free loops are ccw.
    static OrientedLinkDiagram from_pd(const LinkDiagram& d) {
        auto base = std::make_shared<const LinkDiagram>(d);
        std::vector<VertexState> vs(d.crossing_count());
        for (auto comp : d.strands()) {
            bool reverse = false, under = false;
            for (const Slot& s : comp)
                if (s.slot % 2 == 0) {
                    reverse = s.slot == 2;
                    under = true;
                    break;
                }
            if (!under && !comp.empty()) {
                int low = std::numeric_limits<int>::max();
                for (const Slot& s : comp) low = std::min(low, d.crossings()[s.crossing].edges[s.slot]);
                reverse = true;
                if (comp.size() == 2) {
                    // a -> b -> a either way round: enter the first listed crossing at the smaller label
                    const Slot& s = comp[0].crossing < comp[1].crossing ? comp[0] : comp[1];
                    reverse = d.crossings()[s.crossing].edges[s.slot] != low;
                } else {
                    for (const Slot& s : comp) {
                        const auto& e = d.crossings()[s.crossing].edges;
                        if (e[s.slot] == low && e[(s.slot + 2) % 4] == low + 1) reverse = false;
                    }
                }
            }
            for (const Slot& s : comp) {
                const int in = reverse ? (s.slot + 2) % 4 : s.slot;
                vs[s.crossing].legs[in] = Leg::In;
                vs[s.crossing].legs[(in + 2) % 4] = Leg::Out;
            }
        }
        return {std::move(base), std::move(vs), std::vector<LoopState>(d.free_loops(), LoopState::Ccw)};
    }

    [[nodiscard]] const LinkDiagram& base() const noexcept { return *base_; }
    [[nodiscard]] const std::shared_ptr<const LinkDiagram>& base_ptr() const noexcept { return base_; }
    [[nodiscard]] std::span<const VertexState> vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::span<const LoopState> loops() const noexcept { return loops_; }

    /// Every edge runs out of one end and into the other (or is erased at both),
    /// and every vertex pairs each incoming leg with an outgoing one.
    [[nodiscard]] bool is_coherent() const {
        const LinkDiagram& d = *base_;
        for (int c = 0; c < d.crossing_count(); ++c) {
            const VertexState& v = vertices_[c];
            for (int s = 0; s < 4; ++s) {
                const Slot m = d.mate(c, s);
                const Leg here = v.legs[s], there = vertices_[m.crossing].legs[m.slot];
                if (here == Leg::Erased ? there != Leg::Erased : (there == Leg::Erased || there == here))
                    return false;
            }
            if (v.crossing) {
                for (int s = 0; s < 2; ++s)
                    if (v.legs[s] == Leg::Erased || v.legs[s + 2] == Leg::Erased || v.legs[s] == v.legs[s + 2])
                        return false;
            } else {
                for (int s = 0; s < 4; ++s) {
                    if (v.legs[s] == Leg::In) {
                        const int o = v.exit[s];
                        if (o < 0 || o > 3 || o == s || v.legs[o] != Leg::Out) return false;
                    } else if (v.exit[s] != -1) {
                        return false;
                    }
                }
                int outs = 0, ins = 0;
                for (Leg l : v.legs) {
                    outs += l == Leg::Out;
                    ins += l == Leg::In;
                }
                if (ins != outs) return false;
            }
        }
        return true;
    }

    [[nodiscard]] OrientedLinkDiagram reversed() const {
        auto vs = vertices_;
        for (auto& v : vs) {
            std::array<std::int8_t, 4> exit{-1, -1, -1, -1};
            for (int s = 0; s < 4; ++s)
                if (!v.crossing && v.exit[s] >= 0) exit[v.exit[s]] = static_cast<std::int8_t>(s);
            for (auto& l : v.legs)
                if (l != Leg::Erased) l = l == Leg::In ? Leg::Out : Leg::In;
            v.exit = exit;
        }
        auto ls = loops_;
        for (auto& l : ls)
            if (l != LoopState::Erased) l = l == LoopState::Ccw ? LoopState::Cw : LoopState::Ccw;
        return {base_, std::move(vs), std::move(ls)};
    }

    friend bool operator==(const OrientedLinkDiagram& x, const OrientedLinkDiagram& y) {
        return *x.base_ == *y.base_ && x.vertices_ == y.vertices_ && x.loops_ == y.loops_;
    }

  private:
    std::shared_ptr<const LinkDiagram> base_;
    std::vector<VertexState> vertices_;
    std::vector<LoopState> loops_;
};

/// Sum of the signs of the retained crossings.
inline int writhe(const OrientedLinkDiagram& d) {
    int w = 0;
    for (const auto& v : d.vertices())
        if (v.crossing) w += crossing_sign(v);
    return w;
}

/// All 2^k coherent orientations (k = number of components), component i
/// reversed relative to the PD orientation when bit i of the index is set.
/// Strand components come first, then free loops.
inline std::vector<OrientedLinkDiagram> enumerate_orientations(const LinkDiagram& d) {
    const auto pd = OrientedLinkDiagram::from_pd(d);
    const auto comps = d.strands();
    const int k = static_cast<int>(comps.size()) + d.free_loops();
    if (k > 24) throw DiagramError("too many components to enumerate orientations");
    std::vector<OrientedLinkDiagram> out;
    out.reserve(std::size_t{1} << k);
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
        std::vector<VertexState> vs(pd.vertices().begin(), pd.vertices().end());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (!(mask >> i & 1U)) continue;
            for (const Slot& s : comps[i]) {
                auto& l = vs[s.crossing].legs;
                std::swap(l[s.slot], l[(s.slot + 2) % 4]);
            }
        }
        std::vector<LoopState> ls(d.free_loops());
        for (int j = 0; j < d.free_loops(); ++j)
            ls[j] = (mask >> (comps.size() + j) & 1U) ? LoopState::Cw : LoopState::Ccw;
        out.emplace_back(pd.base_ptr(), std::move(vs), std::move(ls));
    }
    return out;
}

/// Swaps over and under at every crossing, keeping the PD convention that slot 0
/// is the incoming under-strand.
inline LinkDiagram mirror(const LinkDiagram& d) {
    const auto o = OrientedLinkDiagram::from_pd(d);
    std::vector<Crossing> xs;
    xs.reserve(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& e = d.crossings()[c].edges;
        const bool over_from_1 = o.vertices()[c].legs[1] == Leg::In;
        if (over_from_1)
            xs.push_back({{e[1], e[2], e[3], e[0]}});
        else
            xs.push_back({{e[3], e[0], e[1], e[2]}});
    }
    return {std::move(xs), d.free_loops()};
}

// ---------------------------------------------------------------------------
// Faces and rotation number

/// Faces of the planar map. `face_of[c][s]` is the face on the left of a walk
/// arriving at crossing c through slot s.
struct FaceStructure {
    std::vector<std::array<int, 4>> face_of;
    std::vector<int> face_size;
    std::vector<int> face_block;   // connected block of the map containing the face
    std::vector<int> outer;        // per block, the face taken as unbounded
    std::vector<int> crossing_block;
};

/// The unbounded face of each block defaults to the face with the most sides
/// (first in scan order on ties).
inline FaceStructure faces(const LinkDiagram& d) {
    FaceStructure f;
    const int n = d.crossing_count();
    f.face_of.assign(n, {-1, -1, -1, -1});
    f.crossing_block.assign(n, -1);
    int blocks = 0;
    for (int c = 0; c < n; ++c) {
        if (f.crossing_block[c] >= 0) continue;
        std::vector<int> stack{c};
        f.crossing_block[c] = blocks;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int y = d.mate(x, s).crossing;
                if (f.crossing_block[y] < 0) {
                    f.crossing_block[y] = blocks;
                    stack.push_back(y);
                }
            }
        }
        ++blocks;
    }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (f.face_of[c][s] >= 0) continue;
            const int id = static_cast<int>(f.face_size.size());
            int size = 0;
            Slot cur{c, s};
            while (f.face_of[cur.crossing][cur.slot] < 0) {
                f.face_of[cur.crossing][cur.slot] = id;
                ++size;
                cur = d.mate(cur.crossing, (cur.slot + 3) % 4);
            }
            f.face_size.push_back(size);
            f.face_block.push_back(f.crossing_block[c]);
        }
    f.outer.assign(blocks, -1);
    for (int id = 0; id < static_cast<int>(f.face_size.size()); ++id) {
        int& o = f.outer[f.face_block[id]];
        if (o < 0 || f.face_size[id] > f.face_size[o]) o = id;
    }
    return f;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

/// Whitney rotation number: the signed count of Seifert circles, +1 for each
/// counterclockwise circle.  `outer` optionally overrides the unbounded face of
/// each block (indices into faces(d.base()).face_size).
inline int rotation_number(const OrientedLinkDiagram& d, const FaceStructure& fs, std::span<const int> outer = {}) {
    const LinkDiagram& base = d.base();
    const int n = base.crossing_count();
    int total = 0;
    for (LoopState l : d.loops()) total += l == LoopState::Ccw ? 1 : l == LoopState::Cw ? -1 : 0;
    if (n == 0) return total;

    // Oriented smoothing of every retained crossing.
    std::vector<std::array<int, 4>> exit(n, {-1, -1, -1, -1});
    for (int c = 0; c < n; ++c) {
        const VertexState& v = d.vertices()[c];
        if (v.crossing) {
            const int ui = v.legs[0] == Leg::In ? 0 : 2;
            const int oi = v.legs[1] == Leg::In ? 1 : 3;
            exit[c][ui] = (oi + 2) % 4;
            exit[c][oi] = (ui + 2) % 4;
        } else {
            for (int s = 0; s < 4; ++s) exit[c][s] = v.exit[s];
        }
    }

    // Regions of the plane minus the Seifert circles, as unions of faces.
    detail::UnionFind uf(static_cast<int>(fs.face_size.size()));
    for (int c = 0; c < n; ++c) {
        std::array<std::pair<int, int>, 2> chords{};
        int nch = 0;
        for (int s = 0; s < 4; ++s)
            if (exit[c][s] >= 0) chords[nch++] = {std::min(s, exit[c][s]), std::max(s, exit[c][s])};
        // Corner k lies between slots k and k+1; compare which side of each chord it is on.
        auto side = [&](int k) {
            unsigned bits = 0;
            for (int i = 0; i < nch; ++i)
                if (chords[i].first <= k && k < chords[i].second) bits |= 1U << i;
            return bits;
        };
        for (int k1 = 0; k1 < 4; ++k1)
            for (int k2 = k1 + 1; k2 < 4; ++k2)
                if (side(k1) == side(k2)) uf.unite(fs.face_of[c][(k1 + 1) % 4], fs.face_of[c][(k2 + 1) % 4]);
        for (int s = 0; s < 4; ++s)
            if (d.vertices()[c].legs[s] == Leg::Erased) {
                const Slot m = base.mate(c, s);
                uf.unite(fs.face_of[c][s], fs.face_of[m.crossing][m.slot]);
            }
    }

    struct Circle {
        int left, right, block;
    };
    std::vector<Circle> circles;
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (d.vertices()[c].legs[s] != Leg::Out || seen[c][s]) continue;
            const Slot first_in = base.mate(c, s);
            circles.push_back({uf.find(fs.face_of[first_in.crossing][first_in.slot]), uf.find(fs.face_of[c][s]),
                               fs.crossing_block[c]});
            Slot out{c, s};
            while (!seen[out.crossing][out.slot]) {
                seen[out.crossing][out.slot] = true;
                const Slot in = base.mate(out);
                out = {in.crossing, exit[in.crossing][in.slot]};
            }
        }

    // Circles are disjoint simple closed curves, so regions and circles form a tree.
    for (std::size_t i = 0; i < circles.size(); ++i) {
        const int outer_face = outer.empty() ? fs.outer[circles[i].block] : outer[circles[i].block];
        const int root = uf.find(outer_face);
        std::vector<int> reached{root};
        for (std::size_t head = 0; head < reached.size(); ++head) {
            for (std::size_t j = 0; j < circles.size(); ++j) {
                if (j == i) continue;
                const auto& cj = circles[j];
                for (auto [from, to] : {std::pair{cj.left, cj.right}, std::pair{cj.right, cj.left}})
                    if (from == reached[head] && std::find(reached.begin(), reached.end(), to) == reached.end())
                        reached.push_back(to);
            }
        }
        const bool has_left = std::find(reached.begin(), reached.end(), circles[i].left) != reached.end();
        const bool has_right = std::find(reached.begin(), reached.end(), circles[i].right) != reached.end();
        if (has_left == has_right) throw DiagramError("diagram is not planar-realizable");
        // Counterclockwise iff the bounded side is on the left.
        total += has_right ? 1 : -1;
    }
    return total;
}

inline int rotation_number(const OrientedLinkDiagram& d) { return rotation_number(d, faces(d.base())); }

}  // namespace jaeger

#endif  // JAEGER_DIAGRAM_HPP
