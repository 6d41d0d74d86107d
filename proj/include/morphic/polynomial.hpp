#pragma once

#include <string>
#include <utility>
#include <vector>

namespace morphic {

// Integer polynomial, coefficients stored lowest degree first, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<long long> coefficients);

    static Polynomial constant(long long c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({0, 1}); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coefficient(int i) const;
    const std::vector<long long>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long evaluate(long long at) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // "x^3-3x^2+x+1"
    std::string to_string() const;

private:
    void trim();
    std::vector<long long> coeffs_;
};

// Exact division by the monic linear factor (x - root); remainder must be zero.
Polynomial divide_by_root(const Polynomial& p, long long root);

// Splits off every integer root of a monic polynomial as (x - r) factors.
// Returns (root, multiplicity) pairs in ascending root order plus the cofactor.
struct LinearFactorization {
    std::vector<std::pair<long long, int>> roots;
    Polynomial rest;
};
LinearFactorization factor_integer_roots(const Polynomial& p);

// "(x-1)(x^2-2x-1)", "(x-1)^3".
std::string factorization_string(const LinearFactorization& f);

}  // namespace morphic
