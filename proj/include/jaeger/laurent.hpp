// Exact arithmetic in Z[a^{±1}, q^{±1}] and its fraction field.

#ifndef JAEGER_LAURENT_HPP
#define JAEGER_LAURENT_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <nlohmann/json.hpp>

namespace jaeger {

using Integer = boost::multiprecision::cpp_int;

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exponent pair (e_a, e_q) of a monomial a^{e_a} q^{e_q}.
struct Exponent {
    int a = 0;
    int q = 0;
    auto operator<=>(const Exponent&) const = default;
};

inline Exponent operator+(Exponent x, Exponent y) { return {x.a + y.a, x.q + y.q}; }
inline Exponent operator-(Exponent x, Exponent y) { return {x.a - y.a, x.q - y.q}; }

/// Sparse Laurent polynomial in a, q with arbitrary-precision integer coefficients.
/// No stored coefficient is zero.
class Laurent {
  public:
    using Terms = std::map<Exponent, Integer>;

    Laurent() = default;
    Laurent(long long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(Exponent{}, Integer(c));
    }
    Laurent(Integer c, Exponent e) {
        if (c != 0) terms_.emplace(e, std::move(c));
    }

    static Laurent monomial(long long c, int ea, int eq) { return Laurent(Integer(c), Exponent{ea, eq}); }
    /// q - q^{-1}
    static Laurent z() { return monomial(1, 0, 1) + monomial(-1, 0, -1); }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

    [[nodiscard]] Integer coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Integer& c, Exponent e) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(-c, e);
        return *this;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
    friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
    friend Laurent operator-(Laurent x) {
        for (auto& [e, c] : x.terms_) c = -c;
        return x;
    }
    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        Laurent r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) r.add_term(cx * cy, ex + ey);
        return r;
    }
    friend bool operator==(const Laurent& x, const Laurent& y) = default;

    [[nodiscard]] Laurent shifted(Exponent by) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
        return r;
    }

    [[nodiscard]] Laurent pow(unsigned k) const {
        Laurent r(1), base = *this;
        while (k) {
            if (k & 1U) r *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return r;
    }

    /// Componentwise minimum exponent (the monomial content). Zero maps to (0,0).
    [[nodiscard]] Exponent min_exponent() const {
        if (terms_.empty()) return {};
        Exponent m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) m = {std::min(m.a, e.a), std::min(m.q, e.q)};
        return m;
    }

    [[nodiscard]] const Integer& leading_coefficient() const { return terms_.rbegin()->second; }

    /// a -> q^{num/den}; every a-exponent times num must be divisible by den.
    [[nodiscard]] Laurent substitute_a(int num, int den = 1) const {
        Laurent r;
        for (const auto& [e, c] : terms_) {
            long long t = static_cast<long long>(e.a) * num;
            if (t % den != 0) throw std::domain_error("substitute_a: fractional q-exponent");
            r.add_term(c, {0, e.q + static_cast<int>(t / den)});
        }
        return r;
    }

    /// a^{2k} -> a^{2k} q^{k*shift}; requires even a-exponents.
    [[nodiscard]] Laurent rescale_a_squared(int shift) const {
        Laurent r;
        for (const auto& [e, c] : terms_) {
            if (e.a % 2 != 0) throw std::domain_error("rescale_a_squared: odd a-exponent");
            r.add_term(c, {e.a, e.q + (e.a / 2) * shift});
        }
        return r;
    }

    /// (a, q) -> (a^{-1}, q^{-1})
    [[nodiscard]] Laurent inverted() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{-e.a, -e.q}, c);
        return r;
    }

    /// Exact quotient by (q - q^{-1}), or nullopt when it does not divide.
    [[nodiscard]] std::optional<Laurent> divide_by_z() const {
        // Slice by a-exponent; within a slice divide the univariate q-polynomial.
        Laurent quotient;
        auto it = terms_.begin();
        while (it != terms_.end()) {
            const int ea = it->first.a;
            std::map<int, Integer> slice;
            for (; it != terms_.end() && it->first.a == ea; ++it) slice.emplace(it->first.q, it->second);
            while (!slice.empty()) {
                auto top = std::prev(slice.end());
                const int hi = top->first;
                Integer c = top->second;
                if (slice.size() == 1 || hi - 2 < slice.begin()->first) return std::nullopt;
                // c q^{hi} = c q^{hi-1} (q - q^{-1}) + c q^{hi-2}
                quotient.add_term(c, {ea, hi - 1});
                slice.erase(top);
                auto& low = slice[hi - 2];
                low += c;
                if (low == 0) slice.erase(hi - 2);
            }
        }
        return quotient;
    }

    [[nodiscard]] std::string to_string() const;
    static Laurent parse(std::string_view text);

    [[nodiscard]] nlohmann::json to_json() const;
    static Laurent from_json(const nlohmann::json& j);

  private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

namespace detail {

inline void append_power(std::string& out, char var, int e) {
    if (e == 0) return;
    if (!out.empty() && out.back() != '-') out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
}

inline std::string monomial_text(const Integer& abs_c, Exponent e) {
    std::string s;
    const bool unit = abs_c == 1;
    if (!unit || (e.a == 0 && e.q == 0)) s = abs_c.str();
    append_power(s, 'a', e.a);
    append_power(s, 'q', e.q);
    return s;
}

class TextCursor {
  public:
    explicit TextCursor(std::string_view s) : s_(s) {}
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    int signed_small() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Integer v = integer();
        if (v > 1000000) fail("exponent out of range");
        int r = v.convert_to<int>();
        return neg ? -r : r;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial text: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(s_) + "\"");
    }
    [[nodiscard]] std::size_t pos() const { return pos_; }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

// term := factor ('*' factor)* ; factor := integer | a[^k] | q[^k]
inline Laurent parse_term(TextCursor& in) {
    Integer coef = 1;
    Exponent e;
    bool any = false;
    do {
        char c = in.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef *= in.integer();
        } else if (c == 'a' || c == 'q') {
            in.accept(c);
            int k = 1;
            if (in.accept('^')) k = in.signed_small();
            (c == 'a' ? e.a : e.q) += k;
        } else {
            in.fail("expected factor");
        }
        any = true;
    } while (in.accept('*'));
    if (!any) in.fail("empty term");
    return Laurent(coef, e);
}

inline Laurent parse_sum(TextCursor& in) {
    Laurent r;
    bool first = true;
    for (;;) {
        char c = in.peek();
        bool neg = false;
        if (c == '-' || c == '+') {
            in.accept(c);
            neg = c == '-';
        } else if (!first) {
            break;
        }
        if (in.peek() == '(') {
            in.accept('(');
            Laurent inner = parse_sum(in);
            in.expect(')');
            r += neg ? -inner : inner;
        } else {
            Laurent t = parse_term(in);
            r += neg ? -t : t;
        }
        first = false;
        char n = in.peek();
        if (n != '+' && n != '-') break;
    }
    return r;
}

inline nlohmann::json integer_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return c.convert_to<std::int64_t>();
    return c.str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ParseError("polynomial json: coefficient must be an integer or a decimal string");
}

}  // namespace detail

/// Terms in descending (e_a, e_q) order, e.g. "a^2*q^-1 - a^-2*q".
inline std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->second < 0;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += detail::monomial_text(neg ? Integer(-it->second) : it->second, it->first);
        first = false;
    }
    return out;
}

inline Laurent Laurent::parse(std::string_view text) {
    detail::TextCursor in(text);
    if (in.at_end()) in.fail("empty input");
    Laurent r = detail::parse_sum(in);
    if (!in.at_end()) in.fail("trailing characters");
    return r;
}

inline nlohmann::json Laurent::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        arr.push_back({detail::integer_to_json(it->second), it->first.a, it->first.q});
    return arr;
}

inline Laurent Laurent::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial json: expected array of [coefficient, e_a, e_q]");
    Laurent r;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[1].is_number_integer() || !t[2].is_number_integer())
            throw ParseError("polynomial json: malformed term " + t.dump());
        r.add_term(detail::integer_from_json(t[0]), {t[1].get<int>(), t[2].get<int>()});
    }
    return r;
}

/// Quotient of two Laurent polynomials. Values are compared by cross-multiplication,
/// so equality never depends on whether either side has been reduced.
class RationalFunction {
  public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    }

    [[nodiscard]] const Laurent& numerator() const noexcept { return num_; }
    [[nodiscard]] const Laurent& denominator() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
        if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
        return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_).reduced();
    }
    friend RationalFunction operator-(const RationalFunction& x) { return {-x.num_, x.den_}; }
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
        return RationalFunction(x.num_ * y.num_, x.den_ * y.den_).reduced();
    }
    friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
        if (y.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(x.num_ * y.den_, x.den_ * y.num_).reduced();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
        return x.num_ * y.den_ == y.num_ * x.den_;
    }

    /// Cancels monomial content, then common factors of (q - q^{-1}); the
    /// denominator ends up with positive leading coefficient.
    [[nodiscard]] RationalFunction reduced() const {
        if (num_.is_zero()) return {};
        const Exponent md = den_.min_exponent();
        Laurent n = num_.shifted(Exponent{} - md);
        Laurent d = den_.shifted(Exponent{} - md);
        for (;;) {
            auto dq = d.divide_by_z();
            if (!dq) break;
            auto nq = n.divide_by_z();
            if (!nq) break;
            n = std::move(*nq);
            d = std::move(*dq);
        }
        // Center the denominator, so (q - q^-1)^k prints as such.
        {
            int lo_a = d.terms().begin()->first.a, hi_a = d.terms().rbegin()->first.a;
            int lo_q = std::numeric_limits<int>::max(), hi_q = std::numeric_limits<int>::min();
            for (const auto& [e, c] : d.terms()) {
                lo_q = std::min(lo_q, e.q);
                hi_q = std::max(hi_q, e.q);
            }
            const Exponent mid{(lo_a + hi_a) / 2, (lo_q + hi_q) / 2};
            n = n.shifted(Exponent{} - mid);
            d = d.shifted(Exponent{} - mid);
        }
        if (d.is_monomial()) {
            const auto& [e, c] = *d.terms().begin();
            if (c == 1 || c == -1) {
                Laurent r = n.shifted(Exponent{} - e);
                return RationalFunction(c == 1 ? r : -r);
            }
        }
        if (d.leading_coefficient() < 0) {
            n = -n;
            d = -d;
        }
        return {std::move(n), std::move(d)};
    }

    [[nodiscard]] RationalFunction substitute_a(int num, int den = 1) const {
        return RationalFunction(num_.substitute_a(num, den), den_.substitute_a(num, den)).reduced();
    }
    [[nodiscard]] RationalFunction rescale_a_squared(int shift) const {
        return RationalFunction(num_.rescale_a_squared(shift), den_.rescale_a_squared(shift));
    }
    [[nodiscard]] RationalFunction inverted() const { return {num_.inverted(), den_.inverted()}; }

    /// "N" when the denominator is 1, otherwise "(N)/(D)".
    [[nodiscard]] std::string to_string() const {
        if (den_ == Laurent(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }
    static RationalFunction parse(std::string_view text) {
        detail::TextCursor in(text);
        if (in.at_end()) in.fail("empty input");
        Laurent n = detail::parse_sum(in);
        Laurent d(1);
        if (in.accept('/')) d = detail::parse_sum(in);
        if (!in.at_end()) in.fail("trailing characters");
        if (d.is_zero()) in.fail("zero denominator");
        return {std::move(n), std::move(d)};
    }

    [[nodiscard]] nlohmann::json to_json() const {
        return {{"numerator", num_.to_json()}, {"denominator", den_.to_json()}};
    }
    static RationalFunction from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
            throw ParseError("rational json: expected {numerator, denominator}");
        Laurent d = Laurent::from_json(j.at("denominator"));
        if (d.is_zero()) throw ParseError("rational json: zero denominator");
        return {Laurent::from_json(j.at("numerator")), std::move(d)};
    }

  private:
    Laurent num_;
    Laurent den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

/// Numerator over a power of (q - q^{-1}); the working value type of the skein engines,
/// where every denominator that ever arises is such a power.
struct ZFraction {
    Laurent num;
    int zpow = 0;

    static Laurent z_power(int k) {
        static const std::vector<Laurent> table = [] {
            std::vector<Laurent> t{Laurent(1)};
            for (int i = 1; i < 64; ++i) t.push_back(t.back() * Laurent::z());
            return t;
        }();
        return k < static_cast<int>(table.size()) ? table[k] : Laurent::z().pow(static_cast<unsigned>(k));
    }

    friend ZFraction operator+(const ZFraction& x, const ZFraction& y) {
        if (x.zpow == y.zpow) return {x.num + y.num, x.zpow};
        if (x.zpow < y.zpow) return {x.num * z_power(y.zpow - x.zpow) + y.num, y.zpow};
        return {x.num + y.num * z_power(x.zpow - y.zpow), x.zpow};
    }
    friend ZFraction operator*(const ZFraction& x, const ZFraction& y) { return {x.num * y.num, x.zpow + y.zpow}; }
    friend ZFraction operator*(const ZFraction& x, const Laurent& p) { return {x.num * p, x.zpow}; }

    [[nodiscard]] ZFraction pow(unsigned k) const { return {num.pow(k), static_cast<int>(k) * zpow}; }

    [[nodiscard]] ZFraction times_z() const {
        if (zpow > 0) return {num, zpow - 1};
        return {num * Laurent::z(), zpow};
    }

    [[nodiscard]] RationalFunction to_rational() const {
        return RationalFunction(num, z_power(zpow)).reduced();
    }
};

}  // namespace jaeger

#endif  // JAEGER_LAURENT_HPP
