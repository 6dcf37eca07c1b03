#ifndef TGF_RAT_HPP
#define TGF_RAT_HPP

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

namespace tgf {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around mpq_class. It exists so that the coefficient
/// grids (Eigen matrices) see a plain scalar type instead of GMP expression
/// templates.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p" or "p/q".
    static Rat parse(const std::string& text);

    [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    /// Reduced "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

/// Exact square root: returns the non-negative rational s with s*s == r, or
/// nothing when r is not the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& r);

/// Floor of the square root for a non-negative integer, plus whether it is exact.
std::optional<BigInt> exact_isqrt(const BigInt& n);

}  // namespace tgf

namespace Eigen {

template <>
struct NumTraits<tgf::Rat> : GenericNumTraits<tgf::Rat> {
    using Real = tgf::Rat;
    using NonInteger = tgf::Rat;
    using Literal = tgf::Rat;
    using Nested = tgf::Rat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TGF_RAT_HPP
