// Rule tables for the state expansion: what a crossing (or a crossing-free
// circle) may be replaced by, and with which weight.
//
// Pictures are drawn on a positive crossing with both strands pointing up:
// legs NW, SW, SE, NE.  In slot terms that crossing has NW = 0, SW = 1,
// SE = 2, NE = 3.  A negative crossing is the same picture turned a quarter
// turn, so one table serves both.

#ifndef JAEGER_RULES_HPP
#define JAEGER_RULES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagram.hpp"
#include "laurent.hpp"

namespace jaeger {

enum class Family { Dn, Bn };

enum class Compass : std::uint8_t { NW = 0, SW = 1, SE = 2, NE = 3 };

enum class PictureKind {
    Crossing,   // coherently oriented crossing, kept
    Smoothing,  // vertical antiparallel arcs
    Turnback,   // horizontal antiparallel arcs
    Erased,     // everything else with at least one strand erased
};

struct LocalPicture {
    std::string name;
    PictureKind kind = PictureKind::Crossing;
    std::array<Leg, 4> legs{};                            // by compass point
    std::vector<std::pair<Compass, Compass>> arcs;        // in-leg -> out-leg, non-crossing pictures only
    friend bool operator==(const LocalPicture&, const LocalPicture&) = default;
};

struct RuleEntry {
    LocalPicture picture;
    RationalFunction weight;
};

struct LoopEntry {
    LoopState state = LoopState::Ccw;
    RationalFunction weight;
};

struct RuleTable {
    Family family = Family::Dn;
    bool experimental = false;
    std::vector<RuleEntry> crossing_rule;
    std::vector<LoopEntry> loop_rule;
    Exponent bracket{-1, 1};  // [D] = (a^bracket.a q^bracket.q)^rot P(D)
};

inline int compass_slot(Compass c, int sign) {
    // Negative crossings are read with SW = 0, SE = 1, NE = 2, NW = 3.
    static constexpr std::array<int, 4> neg{3, 0, 1, 2};
    return sign > 0 ? static_cast<int>(c) : neg[static_cast<int>(c)];
}

/// Quarter turn counterclockwise.
inline Compass turned(Compass c) {
    static constexpr std::array<Compass, 4> t{Compass::SW, Compass::SE, Compass::NE, Compass::NW};
    return t[static_cast<int>(c)];
}

inline std::string to_string(Compass c) {
    static const std::array<std::string, 4> n{"NW", "SW", "SE", "NE"};
    return n[static_cast<int>(c)];
}

inline Compass compass_from_string(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (to_string(static_cast<Compass>(i)) == s) return static_cast<Compass>(i);
    throw ParseError("rule table: unknown leg '" + s + "'");
}

inline std::string to_string(PictureKind k) {
    switch (k) {
        case PictureKind::Crossing: return "crossing";
        case PictureKind::Smoothing: return "smoothing";
        case PictureKind::Turnback: return "turnback";
        case PictureKind::Erased: return "erased";
    }
    return "?";
}

inline PictureKind kind_from_string(const std::string& s) {
    for (auto k : {PictureKind::Crossing, PictureKind::Smoothing, PictureKind::Turnback, PictureKind::Erased})
        if (to_string(k) == s) return k;
    throw ParseError("rule table: unknown kind '" + s + "'");
}

inline std::string to_string(LoopState s) {
    return s == LoopState::Ccw ? "ccw" : s == LoopState::Cw ? "cw" : "erased";
}

inline LoopState loop_state_from_string(const std::string& s) {
    if (s == "ccw") return LoopState::Ccw;
    if (s == "cw") return LoopState::Cw;
    if (s == "erased") return LoopState::Erased;
    throw ParseError("rule table: unknown loop state '" + s + "'");
}

namespace detail {

inline LocalPicture coherent_crossing(const char* name, Compass in1, Compass in2) {
    LocalPicture p{name, PictureKind::Crossing, {Leg::Out, Leg::Out, Leg::Out, Leg::Out}, {}};
    p.legs[static_cast<int>(in1)] = Leg::In;
    p.legs[static_cast<int>(in2)] = Leg::In;
    return p;
}

inline LocalPicture arcs_picture(const char* name, PictureKind kind,
                                 std::vector<std::pair<Compass, Compass>> arcs) {
    LocalPicture p{name, kind, {Leg::Erased, Leg::Erased, Leg::Erased, Leg::Erased}, std::move(arcs)};
    for (auto [from, to] : p.arcs) {
        p.legs[static_cast<int>(from)] = Leg::In;
        p.legs[static_cast<int>(to)] = Leg::Out;
    }
    return p;
}

}  // namespace detail

/// The shipped tables.  The Bn readings of the dashed pictures are one choice
/// among several and are marked experimental.
inline RuleTable default_rule_table(Family family) {
    using C = Compass;
    using detail::arcs_picture;
    using detail::coherent_crossing;
    const RationalFunction z(Laurent::z());
    RuleTable t;
    t.family = family;
    t.crossing_rule = {
        {coherent_crossing("N", C::SW, C::SE), 1},
        {coherent_crossing("E", C::SW, C::NW), 1},
        {coherent_crossing("S", C::NW, C::NE), 1},
        {coherent_crossing("W", C::NE, C::SE), 1},
        {arcs_picture("downup", PictureKind::Smoothing, {{C::NW, C::SW}, {C::SE, C::NE}}), z},
        {arcs_picture("cupcap-lr", PictureKind::Turnback, {{C::NW, C::NE}, {C::SE, C::SW}}), -z},
    };
    if (family == Family::Dn) {
        t.loop_rule = {{LoopState::Ccw, 1}, {LoopState::Cw, 1}};
        t.bracket = {-1, 1};
        return t;
    }
    t.experimental = true;
    const std::vector<RuleEntry> extra = {
        {arcs_picture("downup-l", PictureKind::Erased, {{C::SE, C::NE}}), z},
        {arcs_picture("downup-r", PictureKind::Erased, {{C::NW, C::SW}}), z},
        {arcs_picture("cupcap-lr-d", PictureKind::Erased, {{C::NW, C::NE}}), -z},
        {arcs_picture("cupcap-lr-u", PictureKind::Erased, {{C::SE, C::SW}}), -z},
        {arcs_picture("cross-dashed", PictureKind::Erased, {}), 1},
        {arcs_picture("crossu-l", PictureKind::Erased, {{C::SE, C::NW}}), -1},
        {arcs_picture("crossu-r", PictureKind::Erased, {{C::SW, C::NE}}), -1},
        {arcs_picture("crossd-l", PictureKind::Erased, {{C::NE, C::SW}}), -1},
        {arcs_picture("crossd-r", PictureKind::Erased, {{C::NW, C::SE}}), -1},
    };
    t.crossing_rule.insert(t.crossing_rule.begin() + 5, extra.begin(), extra.begin() + 2);
    t.crossing_rule.insert(t.crossing_rule.end(), extra.begin() + 2, extra.end());
    t.loop_rule = {{LoopState::Ccw, 1}, {LoopState::Cw, 1}, {LoopState::Erased, 1}};
    t.bracket = {-1, 0};
    return t;
}

/// The rule as drawn on a negative crossing: every picture turned a quarter
/// turn clockwise (the negative frame), so vertical and horizontal arcs trade places.
inline std::vector<RuleEntry> negative_crossing_rule(const RuleTable& t) {
    auto cw = [](Compass c) { return turned(turned(turned(c))); };
    std::vector<RuleEntry> out;
    for (const auto& e : t.crossing_rule) {
        RuleEntry r = e;
        for (int c = 0; c < 4; ++c) r.picture.legs[static_cast<int>(cw(static_cast<Compass>(c)))] = e.picture.legs[c];
        for (auto& [from, to] : r.picture.arcs) {
            from = cw(from);
            to = cw(to);
        }
        if (r.picture.kind == PictureKind::Smoothing)
            r.picture.kind = PictureKind::Turnback;
        else if (r.picture.kind == PictureKind::Turnback)
            r.picture.kind = PictureKind::Smoothing;
        out.push_back(std::move(r));
    }
    return out;
}

/// Slot-level form of a picture on a crossing of the given sign.
inline VertexState compile(const LocalPicture& p, int sign = 1) {
    VertexState v;
    v.crossing = p.kind == PictureKind::Crossing;
    for (int c = 0; c < 4; ++c) v.legs[compass_slot(static_cast<Compass>(c), sign)] = p.legs[c];
    if (!v.crossing)
        for (auto [from, to] : p.arcs)
            v.exit[compass_slot(from, sign)] = static_cast<std::int8_t>(compass_slot(to, sign));
    return v;
}

/// Structural problems with a table (empty when it is well formed).
inline std::vector<std::string> table_problems(const RuleTable& t) {
    std::vector<std::string> out;
    for (const auto& e : t.crossing_rule) {
        const auto& p = e.picture;
        if (p.kind == PictureKind::Crossing) {
            bool ok = true;
            for (int s = 0; s < 2; ++s) {
                const Leg x = p.legs[s], y = p.legs[s + 2];
                ok = ok && x != Leg::Erased && y != Leg::Erased && x != y;
            }
            if (!ok) out.push_back(p.name + ": a kept crossing needs one in-leg and one out-leg per strand");
            continue;
        }
        std::array<int, 4> used{};
        for (auto [from, to] : p.arcs) {
            ++used[static_cast<int>(from)];
            ++used[static_cast<int>(to)];
            if (from == to || p.legs[static_cast<int>(from)] != Leg::In || p.legs[static_cast<int>(to)] != Leg::Out)
                out.push_back(p.name + ": arc " + to_string(from) + "->" + to_string(to) + " disagrees with legs");
        }
        for (int c = 0; c < 4; ++c)
            if ((used[c] == 0) != (p.legs[c] == Leg::Erased) || used[c] > 1)
                out.push_back(p.name + ": leg " + to_string(static_cast<Compass>(c)) + " is not on exactly one arc");
        // Arcs must not cross each other inside the vertex.
        if (p.arcs.size() == 2) {
            auto [a1, b1] = p.arcs[0];
            auto [a2, b2] = p.arcs[1];
            const int lo = std::min(static_cast<int>(a1), static_cast<int>(b1));
            const int hi = std::max(static_cast<int>(a1), static_cast<int>(b1));
            const bool in2 = lo < static_cast<int>(a2) && static_cast<int>(a2) < hi;
            const bool in3 = lo < static_cast<int>(b2) && static_cast<int>(b2) < hi;
            if (in2 != in3) out.push_back(p.name + ": arcs cross");
        }
    }
    const std::size_t want = t.family == Family::Dn ? 6 : 15;
    const std::size_t want_loops = t.family == Family::Dn ? 2 : 3;
    if (t.crossing_rule.size() != want)
        out.push_back("expected " + std::to_string(want) + " crossing entries, found " +
                      std::to_string(t.crossing_rule.size()));
    if (t.loop_rule.size() != want_loops)
        out.push_back("expected " + std::to_string(want_loops) + " loop entries, found " +
                      std::to_string(t.loop_rule.size()));
    return out;
}

// --- JSON --------------------------------------------------------------------

inline nlohmann::json to_json(const RuleTable& t) {
    nlohmann::json j;
    j["family"] = t.family == Family::Dn ? "dn" : "bn";
    j["experimental"] = t.experimental;
    j["bracket"] = Laurent::monomial(1, t.bracket.a, t.bracket.q).to_string();
    auto& cr = j["crossing"] = nlohmann::json::array();
    for (const auto& e : t.crossing_rule) {
        nlohmann::json x;
        x["name"] = e.picture.name;
        x["kind"] = to_string(e.picture.kind);
        auto ins = nlohmann::json::array(), outs = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            if (e.picture.legs[c] == Leg::In) ins.push_back(to_string(static_cast<Compass>(c)));
            if (e.picture.legs[c] == Leg::Out) outs.push_back(to_string(static_cast<Compass>(c)));
        }
        x["in"] = ins;
        x["out"] = outs;
        if (e.picture.kind != PictureKind::Crossing) {
            auto arcs = nlohmann::json::array();
            for (auto [from, to] : e.picture.arcs) arcs.push_back({to_string(from), to_string(to)});
            x["arcs"] = arcs;
        }
        x["weight"] = e.weight.to_string();
        cr.push_back(std::move(x));
    }
    auto& lr = j["loop"] = nlohmann::json::array();
    for (const auto& e : t.loop_rule) lr.push_back({{"state", to_string(e.state)}, {"weight", e.weight.to_string()}});
    return j;
}

inline RuleTable rule_table_from_json(const nlohmann::json& j) {
    try {
        RuleTable t;
        const std::string fam = j.at("family").get<std::string>();
        if (fam != "dn" && fam != "bn") throw ParseError("rule table: family must be dn or bn");
        t.family = fam == "dn" ? Family::Dn : Family::Bn;
        t.experimental = j.value("experimental", false);
        const Laurent br = Laurent::parse(j.at("bracket").get<std::string>());
        if (!br.is_monomial() || br.terms().begin()->second != 1)
            throw ParseError("rule table: bracket must be a monic monomial");
        t.bracket = br.terms().begin()->first;
        for (const auto& x : j.at("crossing")) {
            LocalPicture p;
            p.name = x.at("name").get<std::string>();
            p.kind = kind_from_string(x.at("kind").get<std::string>());
            p.legs = {Leg::Erased, Leg::Erased, Leg::Erased, Leg::Erased};
            for (const auto& s : x.at("in")) p.legs[static_cast<int>(compass_from_string(s.get<std::string>()))] = Leg::In;
            for (const auto& s : x.at("out")) {
                auto& l = p.legs[static_cast<int>(compass_from_string(s.get<std::string>()))];
                if (l == Leg::In) throw ParseError("rule table: leg listed as both in and out in " + p.name);
                l = Leg::Out;
            }
            if (x.contains("arcs"))
                for (const auto& a : x.at("arcs")) {
                    if (!a.is_array() || a.size() != 2) throw ParseError("rule table: arcs are [from, to] pairs");
                    p.arcs.emplace_back(compass_from_string(a[0].get<std::string>()),
                                        compass_from_string(a[1].get<std::string>()));
                }
            t.crossing_rule.push_back({std::move(p), RationalFunction::parse(x.at("weight").get<std::string>())});
        }
        for (const auto& x : j.at("loop"))
            t.loop_rule.push_back({loop_state_from_string(x.at("state").get<std::string>()),
                                   RationalFunction::parse(x.at("weight").get<std::string>())});
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("rule table json: ") + e.what());
    }
}

}  // namespace jaeger

#endif  // JAEGER_RULES_HPP
