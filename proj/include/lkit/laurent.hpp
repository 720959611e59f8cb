#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lkit {

/// Exact integer-coefficient Laurent polynomial in the bracket variable A.
/// No zero coefficients are stored; equality is coefficient-wise.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(long long coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int exponent) const;
    int min_exponent() const;  // undefined on zero; asserts
    int max_exponent() const;

    void add_term(long long coeff, int exponent);
    /// *this += p * A^shift, with every coefficient scaled.
    void add_scaled(const LaurentPoly& p, long long scale, int shift);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    /// A -> A^-1 (the mirror image substitution).
    LaurentPoly mirrored() const;

    /// "c*A^e" terms joined by " + ", exponents descending; "0" when zero.
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

    const std::map<int, long long>& terms() const { return terms_; }

private:
    std::map<int, long long> terms_;  // exponent -> nonzero coefficient
};

/// The loop weight delta = -A^2 - A^-2 of the bracket state sum.
LaurentPoly bracket_delta();

}  // namespace lkit
