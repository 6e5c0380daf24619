// Shared pieces of the two skein engines: the memo table and the descending walk.

#ifndef JAEGER_SKEIN_HPP
#define JAEGER_SKEIN_HPP

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gauss.hpp"
#include "laurent.hpp"

namespace jaeger {

/// Values keyed by canonical code.  Entries are never overwritten, so
/// concurrent writers of the same key are harmless.
class SkeinMemo {
  public:
    [[nodiscard]] std::optional<ZFraction> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const std::string& key, const ZFraction& value) {
        std::unique_lock lock(mutex_);
        map_.try_emplace(key, value);
    }
    [[nodiscard]] std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }
    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, ZFraction> map_;
};

/// Forward walks components in order from their first visit; Reverse walks the
/// last component first, backwards.  The two reach different descending diagrams
/// and so give independent computations of the same value.
enum class Traversal { Forward, Reverse };

struct SkeinOptions {
    bool memoize = true;
    Traversal traversal = Traversal::Forward;
    SkeinMemo* memo = nullptr;  // shared table; a private one is used when null
};

namespace detail {

inline std::vector<std::pair<int, int>> walk_order(const GaussDiagram& g, Traversal t) {
    std::vector<std::pair<int, int>> order;
    const int nc = static_cast<int>(g.components.size());
    for (int k = 0; k < nc; ++k) {
        const int i = t == Traversal::Forward ? k : nc - 1 - k;
        const int m = static_cast<int>(g.components[i].size());
        for (int j = 0; j < m; ++j) order.emplace_back(i, t == Traversal::Forward ? j : m - 1 - j);
    }
    return order;
}

/// Switches the diagram towards the descending one along the walk.  Each time
/// a crossing is first met from below, `term(current, c)` collects the
/// correction for that switch.  Returns the descending diagram.
template <class Term>
GaussDiagram descend(const GaussDiagram& g, Traversal t, Term&& term) {
    GaussDiagram cur = g;
    std::vector<bool> seen(g.signs.size(), false);
    for (auto [i, j] : walk_order(g, t)) {
        const Visit& v = cur.components[i][j];
        if (seen[v.crossing]) continue;
        seen[v.crossing] = true;
        if (v.over) continue;
        const int c = v.crossing;
        term(cur, c);
        cur = switched(std::move(cur), c);
    }
    return cur;
}

template <class Eval>
ZFraction memoized(const GaussDiagram& g, bool oriented, const SkeinOptions& opt, Eval&& eval) {
    if (!opt.memoize || opt.memo == nullptr || g.crossing_count() == 0) return eval();
    const std::string key = canonical_code(g, oriented);
    if (auto hit = opt.memo->find(key)) return *hit;
    ZFraction v = eval();
    opt.memo->insert(key, v);
    return v;
}

}  // namespace detail

}  // namespace jaeger

#endif  // JAEGER_SKEIN_HPP
