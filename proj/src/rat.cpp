#include "tgf/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace tgf {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) {
        return std::nullopt;
    }
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rat> exact_sqrt(const Rat& r) {
    // Lowest terms: r is a rational square iff numerator and denominator are.
    auto num = exact_isqrt(r.numerator());
    auto den = exact_isqrt(r.denominator());
    if (!num || !den) {
        return std::nullopt;
    }
    return Rat(*num, *den);
}

}  // namespace tgf
