#ifndef TGF_HALF_SERIES_HPP
#define TGF_HALF_SERIES_HPP

#include <utility>

#include "tgf/bi_series.hpp"

namespace tgf {

/// even + sqrt(v1) * odd, with even and odd sharing one grid.
///
/// Closes BiSeries under the single adjoined radical sqrt(v1). The product
/// folds sqrt(v1)^2 back into a shift by v1:
///   (a1 + sqrt(v1) b1)(a2 + sqrt(v1) b2) = (a1 a2 + v1 b1 b2) + sqrt(v1)(a1 b2 + a2 b1).
template <typename Scalar>
class HalfSeries {
public:
    using Series = BiSeries<Scalar>;

    /// Embeds a plain series as (s, 0).
    explicit HalfSeries(Series even)
        : even_(std::move(even)), odd_(Series::zero(even_.vars(), even_.ord1(), even_.ord2())) {}

    HalfSeries(Series even, Series odd) : even_(std::move(even)), odd_(std::move(odd)) {
        even_.require_same_shape(odd_);
    }

    /// sqrt(v1) itself.
    static HalfSeries root(const VarPair& vars, Eigen::Index ord1, Eigen::Index ord2) {
        return HalfSeries(Series::zero(vars, ord1, ord2), Series::one(vars, ord1, ord2));
    }

    [[nodiscard]] const Series& even() const { return even_; }
    [[nodiscard]] const Series& odd() const { return odd_; }

    [[nodiscard]] bool same_shape(const HalfSeries& o) const { return even_.same_shape(o.even_); }

    /// even - sqrt(v1) * odd.
    [[nodiscard]] HalfSeries conjugate() const { return HalfSeries(even_, -odd_); }

    /// Product with the conjugate, which has no odd part: even^2 - v1 odd^2.
    [[nodiscard]] Series norm() const { return even_ * even_ - shift_var1(odd_ * odd_, 1); }

    friend HalfSeries operator+(const HalfSeries& a, const HalfSeries& b) {
        return HalfSeries(a.even_ + b.even_, a.odd_ + b.odd_);
    }

    friend HalfSeries operator-(const HalfSeries& a, const HalfSeries& b) {
        return HalfSeries(a.even_ - b.even_, a.odd_ - b.odd_);
    }

    friend HalfSeries operator-(const HalfSeries& a) { return HalfSeries(-a.even_, -a.odd_); }

    friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) {
        return HalfSeries(a.even_ * b.even_ + shift_var1(a.odd_ * b.odd_, 1),
                          a.even_ * b.odd_ + a.odd_ * b.even_);
    }

    friend bool operator==(const HalfSeries& a, const HalfSeries& b) {
        return a.even_ == b.even_ && a.odd_ == b.odd_;
    }

private:
    Series even_;
    Series odd_;
};

using RatHalfSeries = HalfSeries<Rat>;

}  // namespace tgf

#endif  // TGF_HALF_SERIES_HPP
