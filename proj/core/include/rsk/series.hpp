#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rsk/partition.hpp"

namespace rsk {

// Exact rational arithmetic; always kept in lowest terms with positive
// denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den); // ZeroDenominator on den == 0
Rational rational_from_string(const std::string& text); // "n" or "n/d"
std::string rational_to_string(const Rational& q);      // "n/d", or "n" when d == 1

// Formal power series in one variable truncated at a fixed degree.
// Coefficients are arbitrary-precision integers.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree);
    static TruncatedSeries one(std::size_t degree);
    // 1/(1 - q^step) = 1 + q^step + q^(2 step) + ...; step >= 1.
    static TruncatedSeries geometric(std::size_t step, std::size_t degree);

    std::size_t degree() const { return coeff_.size() - 1; }
    const mpz_class& coeff(std::size_t d) const { return coeff_.at(d); }
    void add_at(std::size_t d, const mpz_class& v);

    TruncatedSeries operator+(const TruncatedSeries&) const;
    TruncatedSeries operator*(const TruncatedSeries&) const;

    bool operator==(const TruncatedSeries&) const = default;

    const std::vector<mpz_class>& coefficients() const { return coeff_; }

private:
    std::vector<mpz_class> coeff_;
};

// Strictly positive weight x_c for each diagonal content c. Lookups outside
// the stored support throw MissingWeight.
class ContentWeights {
public:
    explicit ContentWeights(std::map<int, Rational> weights);
    // Weight 1 on every content the shape can reach.
    static ContentWeights ones(const Partition& shape);

    const Rational& at(int content) const;
    // Shapes reach contents -(rows-1) .. (cols-1); throws MissingWeight if
    // any of them is absent.
    void require_cover(const Partition& shape) const;
    bool integer_valued() const;

    const std::map<int, Rational>& weights() const { return w_; }

private:
    std::map<int, Rational> w_;
};

} // namespace rsk
