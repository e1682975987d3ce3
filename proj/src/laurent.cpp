#include "hfk11/laurent.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hfk {

void LaurentPolynomial::add_term(int doubled_exp, long long c) {
    if (!c) return;
    auto it = coeffs_.find(doubled_exp);
    if (it == coeffs_.end()) {
        coeffs_[doubled_exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool LaurentPolynomial::has_half_integer_exponents() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return true;
    return false;
}

bool LaurentPolynomial::is_symmetric() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c) return false;
    return true;
}

long long LaurentPolynomial::evaluate_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

long long LaurentPolynomial::evaluate_at_minus_one() const {
    long long s = 0;
    for (const auto& [e, c] : coeffs_) {
        if (e % 2 != 0) throw std::domain_error("half-integer exponent at T=-1");
        s += (e / 2) % 2 == 0 ? c : -c;
    }
    return s;
}

LaurentPolynomial LaurentPolynomial::shifted(int doubled_exp) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + doubled_exp] = c;
    return out;
}

int LaurentPolynomial::min_doubled_exponent() const {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int LaurentPolynomial::max_doubled_exponent() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.coeffs_) out.add_term(e, c);
    return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b.coeffs_) out.add_term(e, -c);
    return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    // highest power first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        long long c = it->second;
        int e = it->first;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long ac = std::llabs(c);
        std::string power;
        if (e != 0) {
            power = "T";
            if (e != 2) {
                power += "^";
                if (e % 2 == 0)
                    power += std::to_string(e / 2);
                else
                    power += "(" + std::to_string(e) + "/2)";
            }
        }
        if (power.empty())
            out += std::to_string(ac);
        else if (ac == 1)
            out += power;
        else
            out += std::to_string(ac) + power;
    }
    return out;
}

}  // namespace hfk
