// Framed Kauffman polynomial F(a,q) of an unoriented diagram (Dubrovnik form).
//   F(X+) - F(X-) = (q - q^-1) (F(||) - F(=))
//   F(positive curl) = a^2 q^-1 F,  F(circle) = (a^2 q^-1 - a^-2 q)/(q - q^-1) + 1
//
// The diagram is given some orientation only to name things: X+ is the
// crossing that is positive for it, || its oriented smoothing, = the other one.

#ifndef JAEGER_KAUFFMAN_HPP
#define JAEGER_KAUFFMAN_HPP

#include "skein.hpp"

namespace jaeger {

namespace detail {

inline ZFraction kauffman_loop() {
    return {Laurent::monomial(1, 2, -1) - Laurent::monomial(1, -2, 1) + Laurent::z(), 1};
}

inline ZFraction kauffman_rec(const GaussDiagram& g, const SkeinOptions& opt) {
    return memoized(g, false, opt, [&] {
        ZFraction acc{Laurent(), 0};
        const GaussDiagram desc = descend(g, opt.traversal, [&](const GaussDiagram& cur, int c) {
            ZFraction cross = kauffman_rec(unoriented_smoothing(cur, c), opt);
            ZFraction along = kauffman_rec(oriented_smoothing(cur, c), opt);
            along.num = -along.num;
            ZFraction t = (cross + along).times_z();
            if (cur.signs[c] > 0) t.num = -t.num;
            acc = acc + t;
        });
        const int w = desc.writhe();
        ZFraction base = kauffman_loop().pow(static_cast<unsigned>(desc.component_count()));
        return acc + base * Laurent::monomial(1, 2 * w, -w);
    });
}

}  // namespace detail

inline ZFraction kauffman_fraction(const GaussDiagram& g, SkeinOptions opt = {}) {
    SkeinMemo local;
    if (opt.memoize && opt.memo == nullptr) opt.memo = &local;
    return detail::kauffman_rec(g, opt);
}

inline RationalFunction evaluate_kauffman(const GaussDiagram& g, const SkeinOptions& opt = {}) {
    return kauffman_fraction(g, opt).to_rational();
}

inline RationalFunction evaluate_kauffman(const LinkDiagram& d, const SkeinOptions& opt = {}) {
    return evaluate_kauffman(to_gauss(d), opt);
}

/// a -> q^n
inline RationalFunction specialize_kauffman(const LinkDiagram& d, int n, const SkeinOptions& opt = {}) {
    return evaluate_kauffman(d, opt).substitute_a(n);
}

}  // namespace jaeger

#endif  // JAEGER_KAUFFMAN_HPP
