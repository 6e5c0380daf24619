// Framed HOMFLY-PT polynomial P(a,q) of an oriented diagram.
//   P(X+) - P(X-) = (q - q^-1) P(smoothing)
//   P(positive curl) = a P,  P(circle) = (a - a^-1)/(q - q^-1),  P(empty) = 1

#ifndef JAEGER_HOMFLY_HPP
#define JAEGER_HOMFLY_HPP

#include "skein.hpp"

namespace jaeger {

namespace detail {

inline ZFraction homfly_loop() { return {Laurent::monomial(1, 1, 0) - Laurent::monomial(1, -1, 0), 1}; }

inline ZFraction homfly_rec(const GaussDiagram& g, const SkeinOptions& opt) {
    return memoized(g, true, opt, [&] {
        ZFraction acc{Laurent(), 0};
        const GaussDiagram desc = descend(g, opt.traversal, [&](const GaussDiagram& cur, int c) {
            ZFraction t = homfly_rec(oriented_smoothing(cur, c), opt).times_z();
            if (cur.signs[c] < 0) t.num = -t.num;
            acc = acc + t;
        });
        // A descending diagram is a stack of unknotted circles.
        ZFraction base = homfly_loop().pow(static_cast<unsigned>(desc.component_count()));
        return acc + base * Laurent::monomial(1, desc.writhe(), 0);
    });
}

}  // namespace detail

inline ZFraction homfly_fraction(const GaussDiagram& g, SkeinOptions opt = {}) {
    SkeinMemo local;
    if (opt.memoize && opt.memo == nullptr) opt.memo = &local;
    return detail::homfly_rec(g, opt);
}

inline RationalFunction evaluate_homfly(const GaussDiagram& g, const SkeinOptions& opt = {}) {
    return homfly_fraction(g, opt).to_rational();
}

inline RationalFunction evaluate_homfly(const OrientedLinkDiagram& d, const SkeinOptions& opt = {}) {
    return evaluate_homfly(to_gauss(d), opt);
}

/// a -> q^n
inline RationalFunction specialize_homfly(const OrientedLinkDiagram& d, int n, const SkeinOptions& opt = {}) {
    return evaluate_homfly(d, opt).substitute_a(n);
}

}  // namespace jaeger

#endif  // JAEGER_HOMFLY_HPP
