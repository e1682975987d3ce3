#pragma once

#include <map>
#include <string>

namespace hfk {

/// Integer Laurent polynomial in a formal variable T.
///
/// Exponents may be half-integers (links have them); they are stored doubled,
/// so the key 2k represents T^k and the key 2k+1 represents T^(k+1/2).
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(long long constant) {
        if (constant) coeffs_[0] = constant;
    }

    static LaurentPolynomial term(long long coeff, int doubled_exp) {
        LaurentPolynomial p;
        if (coeff) p.coeffs_[doubled_exp] = coeff;
        return p;
    }

    /// Coefficient of T^(doubled/2).
    long long coeff(int doubled_exp) const {
        auto it = coeffs_.find(doubled_exp);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add_term(int doubled_exp, long long c);

    bool is_zero() const { return coeffs_.empty(); }
    bool has_half_integer_exponents() const;

    /// True iff invariant under T <-> 1/T.
    bool is_symmetric() const;

    long long evaluate_at_one() const;
    /// Only defined for integer exponents; throws std::domain_error otherwise.
    long long evaluate_at_minus_one() const;

    /// Multiply by T^(doubled/2).
    LaurentPolynomial shifted(int doubled_exp) const;

    int min_doubled_exponent() const;  // 0 when zero
    int max_doubled_exponent() const;

    const std::map<int, long long>& terms() const { return coeffs_; }

    std::string str() const;

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::map<int, long long> coeffs_;  // doubled exponent -> nonzero coefficient
};

}  // namespace hfk
