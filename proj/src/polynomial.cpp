#include "morphic/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace morphic {

Polynomial::Polynomial(std::vector<long long> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long Polynomial::coefficient(int i) const {
    return (i < 0 || i > degree()) ? 0 : coeffs_[static_cast<std::size_t>(i)];
}

long long Polynomial::evaluate(long long at) const {
    long long acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const long long c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const long long mag = std::llabs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (mag != 1 || i == 0) out += std::to_string(mag);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

Polynomial divide_by_root(const Polynomial& p, long long root) {
    if (p.degree() < 1) throw std::invalid_argument("divide_by_root: polynomial of degree < 1");
    // Synthetic division from the top coefficient down.
    const auto& c = p.coefficients();
    std::vector<long long> q(c.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * (i + 1 == c.size() ? 0 : root);
        q[i - 1] = carry;
    }
    if (c[0] + carry * root != 0) throw std::invalid_argument("divide_by_root: nonzero remainder");
    return Polynomial(std::move(q));
}

LinearFactorization factor_integer_roots(const Polynomial& p) {
    if (p.is_zero() || p.coefficient(p.degree()) != 1)
        throw std::invalid_argument("factor_integer_roots: polynomial must be monic");
    LinearFactorization out;
    Polynomial rest = p;
    auto record = [&](long long r) {
        if (!out.roots.empty() && out.roots.back().first == r)
            ++out.roots.back().second;
        else
            out.roots.emplace_back(r, 1);
    };
    while (rest.degree() >= 1) {
        std::optional<long long> root;
        const long long c0 = rest.coefficient(0);
        if (c0 == 0) {
            root = 0;
        } else {
            const long long bound = std::llabs(c0);
            for (long long d = 1; d <= bound && !root; ++d) {
                if (bound % d != 0) continue;
                if (rest.evaluate(-d) == 0)
                    root = -d;
                else if (rest.evaluate(d) == 0)
                    root = d;
            }
        }
        if (!root) break;
        rest = divide_by_root(rest, *root);
        record(*root);
    }
    std::sort(out.roots.begin(), out.roots.end());
    // Merge equal roots found in separate passes.
    std::vector<std::pair<long long, int>> merged;
    for (const auto& [r, m] : out.roots) {
        if (!merged.empty() && merged.back().first == r)
            merged.back().second += m;
        else
            merged.emplace_back(r, m);
    }
    out.roots = std::move(merged);
    out.rest = std::move(rest);
    return out;
}

std::string factorization_string(const LinearFactorization& f) {
    std::string out;
    for (const auto& [r, m] : f.roots) {
        out += '(' + Polynomial({-r, 1}).to_string() + ')';
        if (m > 1) out += '^' + std::to_string(m);
    }
    if (f.rest.degree() >= 1 || out.empty()) out += '(' + f.rest.to_string() + ')';
    return out;
}

}  // namespace morphic
