#ifndef FGM_POLYNOMIAL_HPP
#define FGM_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "json.hpp"
#include "rational.hpp"

namespace fgm {

/// Exact (GMP rational) or approximate (double) coefficient field.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

template <Scalar S>
constexpr const char* scalar_kind_name() {
    return is_exact_v<S> ? "exact-rational" : "approximate-real";
}

/// Univariate polynomial with ascending coefficients. Trailing zeros are
/// stripped on construction, so the zero polynomial has no coefficients.
template <Scalar S>
class Poly {
   public:
    using scalar_type = S;

    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<S> coeffs) : coeffs_(coeffs) { normalize(); }

    static Poly constant(const S& value) { return Poly(std::vector<S>{value}); }
    /// theta + shift
    static Poly linear(const S& shift) { return Poly(std::vector<S>{shift, S(1)}); }

    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<S>& coeffs() const noexcept { return coeffs_; }
    std::span<const S> span() const noexcept { return coeffs_; }

    /// Coefficient of theta^i; zero beyond the degree.
    S operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : S(0); }
    const S& leading() const { return coeffs_.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> out(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<S> out(std::max(a.coeffs_.size(), b.coeffs_.size()), S(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend Poly operator*(const S& k, const Poly& p) {
        std::vector<S> out(p.coeffs_);
        for (auto& c : out) c *= k;
        return Poly(std::move(out));
    }

    /// In-place multiplication by (theta + shift).
    Poly& mul_linear(const S& shift) {
        if (is_zero()) return *this;
        coeffs_.push_back(S(0));
        for (std::size_t j = coeffs_.size() - 1; j > 0; --j) {
            S next = coeffs_[j - 1] + shift * coeffs_[j];
            coeffs_[j] = std::move(next);
        }
        coeffs_[0] *= shift;
        normalize();
        return *this;
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == S(0)) coeffs_.pop_back();
        if constexpr (is_exact_v<S>)
            for (auto& c : coeffs_) c.canonicalize();
    }

    std::vector<S> coeffs_;
};

using RationalPoly = Poly<Rational>;
using RealPoly = Poly<double>;

/// Formal derivative.
template <Scalar S>
Poly<S> derivative(const Poly<S>& p) {
    if (p.is_constant()) return Poly<S>{};
    std::vector<S> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = S(static_cast<long>(i)) * p.coeffs()[i];
    return Poly<S>(std::move(out));
}

/// Horner evaluation. T may be wider than the coefficient type (double -> complex).
template <Scalar S, class T>
T eval(const Poly<S>& p, const T& t) {
    T acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + T(*it);
    return acc;
}

template <Scalar S>
S eval(const Poly<S>& p, const S& t) {
    return eval<S, S>(p, t);
}

template <Scalar S>
Poly<S> monic(const Poly<S>& p) {
    if (p.is_zero()) return p;
    const S lead = p.leading();
    std::vector<S> out(p.coeffs());
    for (auto& c : out) c /= lead;
    return Poly<S>(std::move(out));
}

/// Long division: returns (quotient, remainder) with deg r < deg b.
template <Scalar S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<S>{}, a};
    std::vector<S> rem(a.coeffs());
    const std::size_t db = b.coeffs().size() - 1;
    std::vector<S> quot(rem.size() - db, S(0));
    const S& lead = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        S q = rem[k + db] / lead;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
        rem[k + db] = S(0);
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {Poly<S>(std::move(quot)), Poly<S>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm. Exact scalars only.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// Number of times (theta - root) divides p exactly. Zero polynomial is rejected.
inline int root_multiplicity(RationalPoly p, const Rational& root) {
    if (p.is_zero()) throw DomainError("root multiplicity of the zero polynomial");
    const RationalPoly factor = RationalPoly::linear(-root);
    int count = 0;
    for (;;) {
        auto [q, r] = divmod(p, factor);
        if (!r.is_zero()) return count;
        p = std::move(q);
        ++count;
    }
}

/// The c-values of the score rewrite. Non-empty, finite, nonzero.
template <Scalar S>
class CShiftList {
   public:
    explicit CShiftList(std::vector<S> values) : values_(std::move(values)) {
        if (values_.empty()) throw DomainError("c-shift list must be non-empty");
        for (const auto& v : values_) {
            if (v == S(0)) throw DomainError("c-shift values must be nonzero");
            if constexpr (!is_exact_v<S>)
                if (!std::isfinite(v)) throw DomainError("c-shift values must be finite");
        }
    }
    CShiftList(std::initializer_list<S> values) : CShiftList(std::vector<S>(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<S>& values() const noexcept { return values_; }
    const S& operator[](std::size_t i) const { return values_[i]; }

   private:
    std::vector<S> values_;
};

/// k(theta) = prod (theta + c_i), expanded by repeated linear-factor multiplication.
template <Scalar S>
Poly<S> build_k(const CShiftList<S>& c) {
    Poly<S> k = Poly<S>::constant(S(1));
    for (const auto& ci : c.values()) k.mul_linear(ci);
    return k;
}

/// h(theta) = sum_i prod_{j != i} (theta + c_j), obtained as k'(theta).
template <Scalar S>
Poly<S> build_h(const CShiftList<S>& c) {
    return derivative(build_k(c));
}

/// Runtime-tagged polynomial, as read from JSON.
using AnyPoly = std::variant<RationalPoly, RealPoly>;

/// gcd over tagged operands; approximate operands raise ModeError.
inline RationalPoly gcd(const AnyPoly& a, const AnyPoly& b) {
    const auto* ea = std::get_if<RationalPoly>(&a);
    const auto* eb = std::get_if<RationalPoly>(&b);
    if (!ea || !eb) throw ModeError("gcd is only defined for exact-rational polynomials");
    return gcd(*ea, *eb);
}

template <Scalar S>
nlohmann::json to_json(const Poly<S>& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        if constexpr (is_exact_v<S>)
            coeffs.push_back(to_string(c));
        else
            coeffs.push_back(c);
    }
    return {{"scalar_kind", scalar_kind_name<S>()}, {"coeffs", std::move(coeffs)}};
}

inline AnyPoly poly_from_json(const nlohmann::json& j) {
    const auto kind = j.at("scalar_kind").get<std::string>();
    const auto& coeffs = j.at("coeffs");
    if (kind == scalar_kind_name<Rational>()) {
        std::vector<Rational> out;
        for (const auto& c : coeffs) out.push_back(parse_rational(c.get<std::string>()));
        return RationalPoly(std::move(out));
    }
    if (kind == scalar_kind_name<double>()) {
        std::vector<double> out;
        for (const auto& c : coeffs) out.push_back(c.get<double>());
        return RealPoly(std::move(out));
    }
    throw ModeError("unknown scalar_kind '" + kind + "'");
}

/// Parses a polynomial of a fixed kind; a kind mismatch raises ModeError.
template <Scalar S>
Poly<S> poly_from_json_as(const nlohmann::json& j) {
    auto any = poly_from_json(j);
    if (auto* p = std::get_if<Poly<S>>(&any)) return std::move(*p);
    throw ModeError(std::string("expected ") + scalar_kind_name<S>() + " polynomial");
}

/// Lossy conversion of exact coefficients to double.
inline RealPoly to_real(const RationalPoly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_d());
    return RealPoly(std::move(out));
}

}  // namespace fgm

#endif  // FGM_POLYNOMIAL_HPP
