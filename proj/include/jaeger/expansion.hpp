// State expansion of an unoriented diagram through a rule table: every crossing
// is replaced by one of the table's pictures, every crossing-free circle gets
// one of the loop entries, and only globally coherent choices are kept.  Each
// state contributes weight * base^rot * P(resolved diagram).

#ifndef JAEGER_EXPANSION_HPP
#define JAEGER_EXPANSION_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "homfly.hpp"
#include "kauffman.hpp"
#include "rules.hpp"

namespace jaeger {

struct ExpansionState {
    std::vector<int> choice;       // entry of the crossing rule, per crossing
    std::vector<int> loop_choice;  // entry of the loop rule, per free loop
    RationalFunction weight;
    OrientedLinkDiagram resolved;
};

namespace detail {

struct CompiledTable {
    std::vector<VertexState> vertices;
    std::vector<RationalFunction> weights;
};

inline CompiledTable compile_table(const RuleTable& t) {
    CompiledTable c;
    for (const auto& e : t.crossing_rule) {
        c.vertices.push_back(compile(e.picture));
        c.weights.push_back(e.weight);
    }
    return c;
}

inline bool edge_coherent(Leg x, Leg y) {
    if (x == Leg::Erased || y == Leg::Erased) return x == y;
    return x != y;
}

inline ExpansionState make_state(const std::shared_ptr<const LinkDiagram>& base, const CompiledTable& ct,
                                 const RuleTable& t, std::vector<int> choice, std::vector<int> loops) {
    std::vector<VertexState> vs;
    vs.reserve(choice.size());
    RationalFunction w(1);
    for (int k : choice) {
        vs.push_back(ct.vertices[k]);
        w = w * ct.weights[k];
    }
    std::vector<LoopState> ls;
    for (int k : loops) {
        ls.push_back(t.loop_rule[k].state);
        w = w * t.loop_rule[k].weight;
    }
    return {std::move(choice), std::move(loops), std::move(w), OrientedLinkDiagram(base, std::move(vs), std::move(ls))};
}

/// Calls `emit(choice)` for every loop-rule assignment of `n` free loops.
inline void for_each_loop_choice(int n, std::size_t options, const std::function<void(const std::vector<int>&)>& emit) {
    if (n > 0 && options == 0) return;
    std::vector<int> cur(n, 0);
    for (;;) {
        emit(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] + 1 == static_cast<int>(options)) cur[i--] = 0;
        if (i < 0) return;
        ++cur[i];
    }
}

}  // namespace detail

/// Backtracking over crossings in breadth-first order; an edge is checked as
/// soon as both of its ends are assigned.  States come out in a fixed order.
inline void for_each_state(const LinkDiagram& d, const RuleTable& t,
                           const std::function<void(ExpansionState&&)>& emit) {
    const auto base = std::make_shared<const LinkDiagram>(d);
    const auto ct = detail::compile_table(t);
    const int n = d.crossing_count();

    std::vector<int> order, pos(n, -1);
    for (int s = 0; s < n; ++s) {
        if (pos[s] >= 0) continue;
        pos[s] = static_cast<int>(order.size());
        order.push_back(s);
        for (std::size_t h = order.size() - 1; h < order.size(); ++h)
            for (int k = 0; k < 4; ++k) {
                const int y = d.mate(order[h], k).crossing;
                if (pos[y] < 0) {
                    pos[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
            }
    }
    // checks[i]: slot pairs (own slot, other end) to test once order[i] is set.
    std::vector<std::vector<std::pair<int, Slot>>> checks(n);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            const Slot m = d.mate(c, s);
            if (pos[m.crossing] < pos[c] || (m.crossing == c && m.slot < s)) checks[pos[c]].push_back({s, m});
        }

    std::vector<int> choice(n, -1);
    const std::size_t loop_options = t.loop_rule.size();
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            detail::for_each_loop_choice(d.free_loops(), loop_options, [&](const std::vector<int>& loops) {
                emit(detail::make_state(base, ct, t, choice, loops));
            });
            return;
        }
        const int c = order[i];
        for (int k = 0; k < static_cast<int>(ct.vertices.size()); ++k) {
            const auto& legs = ct.vertices[k].legs;
            bool ok = true;
            for (const auto& [s, m] : checks[i]) {
                const Leg other = m.crossing == c ? legs[m.slot] : ct.vertices[choice[m.crossing]].legs[m.slot];
                if (!detail::edge_coherent(legs[s], other)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            choice[c] = k;
            rec(i + 1);
        }
        choice[c] = -1;
    };
    rec(0);
}

inline std::vector<ExpansionState> enumerate_states(const LinkDiagram& d, const RuleTable& t) {
    std::vector<ExpansionState> out;
    for_each_state(d, t, [&](ExpansionState&& s) { out.push_back(std::move(s)); });
    return out;
}

/// Every one of the |rule|^c choices, filtered afterwards by the coherence check
/// of the resolved diagram.  Reference implementation for testing.
inline std::vector<ExpansionState> enumerate_states_unpruned(const LinkDiagram& d, const RuleTable& t) {
    const auto base = std::make_shared<const LinkDiagram>(d);
    const auto ct = detail::compile_table(t);
    const int n = d.crossing_count();
    std::vector<ExpansionState> out;
    detail::for_each_loop_choice(n, ct.vertices.size(), [&](const std::vector<int>& choice) {
        detail::for_each_loop_choice(d.free_loops(), t.loop_rule.size(), [&](const std::vector<int>& loops) {
            auto s = detail::make_state(base, ct, t, choice, loops);
            if (s.resolved.is_coherent()) out.push_back(std::move(s));
        });
    });
    return out;
}

/// Evaluates states of one diagram; faces are computed once and the HOMFLY
/// memo is shared (safe across threads).
class StateEvaluator {
  public:
    StateEvaluator(const LinkDiagram& d, const RuleTable& t) : faces_(faces(d)), bracket_(t.bracket) {}

    [[nodiscard]] int rotation(const ExpansionState& s) const { return rotation_number(s.resolved, faces_); }

    [[nodiscard]] RationalFunction homfly(const ExpansionState& s) const {
        return homfly_fraction(to_gauss(s.resolved), {true, Traversal::Forward, &memo_}).to_rational();
    }

    /// bracket^rot * P, kept over a power of (q - q^-1); the weight is not included.
    [[nodiscard]] ZFraction value_fraction(const ExpansionState& s) const {
        const int r = rotation(s);
        ZFraction p = homfly_fraction(to_gauss(s.resolved), {true, Traversal::Forward, &memo_});
        return p * Laurent::monomial(1, bracket_.a * r, bracket_.q * r);
    }

    [[nodiscard]] RationalFunction value(const ExpansionState& s) const {
        return s.weight * value_fraction(s).to_rational();
    }

    [[nodiscard]] const SkeinMemo& memo() const { return memo_; }

  private:
    FaceStructure faces_;
    Exponent bracket_;
    mutable SkeinMemo memo_;
};

inline RationalFunction evaluate_state(const ExpansionState& s, const RuleTable& t) {
    return StateEvaluator(s.resolved.base(), t).value(s);
}

struct ExpandOptions {
    unsigned jobs = 1;
};

struct ExpansionResult {
    RationalFunction value;
    std::size_t states = 0;
};

inline ExpansionResult expand_detailed(const LinkDiagram& d, const RuleTable& t, const ExpandOptions& opt = {}) {
    const auto states = enumerate_states(d, t);
    const StateEvaluator ev(d, t);
    const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(states.size())));

    // Weights that are Laurent polynomials are summed over a power of z;
    // anything else falls back to general fractions.
    struct Partial {
        ZFraction z{Laurent(), 0};
        RationalFunction rest;
    };
    std::vector<Partial> partial(jobs);
    auto work = [&](unsigned w) {
        const std::size_t lo = states.size() * w / jobs, hi = states.size() * (w + 1) / jobs;
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& s = states[i];
            if (s.weight.denominator() == Laurent(1))
                partial[w].z = partial[w].z + ev.value_fraction(s) * s.weight.numerator();
            else
                partial[w].rest += ev.value(s);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    ZFraction total{Laurent(), 0};
    RationalFunction rest;
    for (const auto& p : partial) {
        total = total + p.z;
        rest += p.rest;
    }
    return {(total.to_rational() + rest).reduced(), states.size()};
}

inline RationalFunction expand(const LinkDiagram& d, const RuleTable& t, const ExpandOptions& opt = {}) {
    return expand_detailed(d, t, opt).value;
}

// --- identity checks ---------------------------------------------------------

struct SpecializedCheck {
    int n = 0;
    bool equal = false;
};

struct IdentityReport {
    Family family = Family::Dn;
    RationalFunction expanded;
    RationalFunction target;  // F for Dn; F with a^2 -> a^2 q for Bn
    bool equal = false;
    std::vector<SpecializedCheck> specialized;  // Bn: a = q^n against F at a^2 = q^(2n+1)
    std::size_t states = 0;
    double seconds = 0;
};

inline IdentityReport verify_identity(const LinkDiagram& d, Family family = Family::Dn, const ExpandOptions& opt = {},
                                      const RuleTable* table = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    const RuleTable t = table ? *table : default_rule_table(family);
    IdentityReport r;
    r.family = family;
    const auto ex = expand_detailed(d, t, opt);
    r.expanded = ex.value;
    r.states = ex.states;
    const RationalFunction f = evaluate_kauffman(d);
    if (family == Family::Dn) {
        r.target = f;
    } else {
        r.target = f.rescale_a_squared(1).reduced();
        for (int n : {1, 2, 3})
            r.specialized.push_back({n, ex.value.substitute_a(n) == f.substitute_a(2 * n + 1, 2)});
    }
    r.equal = r.expanded == r.target;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

struct PairCheck {
    std::string name;
    RationalFunction left, right;
    bool equal = false;
};

struct TableReport {
    std::vector<std::string> problems;  // structural
    std::vector<PairCheck> pairs;
    [[nodiscard]] bool passed() const {
        return problems.empty() && std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.equal; });
    }
};

struct DiagramPair {
    std::string name;
    LinkDiagram left, right;
};

/// The expansion of a table is only useful if it ignores Reidemeister II and III;
/// each pair should expand to the same value.
inline TableReport validate_table(const RuleTable& t, const std::vector<DiagramPair>& pairs,
                                  const ExpandOptions& opt = {}) {
    TableReport r;
    r.problems = table_problems(t);
    for (const auto& p : pairs) {
        PairCheck c{p.name, expand(p.left, t, opt), expand(p.right, t, opt), false};
        c.equal = c.left == c.right;
        r.pairs.push_back(std::move(c));
    }
    return r;
}

}  // namespace jaeger

#endif  // JAEGER_EXPANSION_HPP
