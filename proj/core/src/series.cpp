#include "rsk/series.hpp"

namespace rsk {

Rational make_rational(long num, long den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ParseError("cannot parse rational: " + text);
    if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeff_(degree + 1, mpz_class(0)) {}

TruncatedSeries TruncatedSeries::one(std::size_t degree) {
    TruncatedSeries s(degree);
    s.coeff_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t step, std::size_t degree) {
    if (step == 0) throw ZeroDenominator("geometric series needs a positive step");
    TruncatedSeries s(degree);
    for (std::size_t d = 0; d <= degree; d += step) s.coeff_[d] = 1;
    return s;
}

void TruncatedSeries::add_at(std::size_t d, const mpz_class& v) {
    if (d < coeff_.size()) coeff_[d] += v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (degree() != o.degree()) throw SizeMismatch("series degrees differ");
    TruncatedSeries s(degree());
    for (std::size_t d = 0; d < coeff_.size(); ++d) s.coeff_[d] = coeff_[d] + o.coeff_[d];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (degree() != o.degree()) throw SizeMismatch("series degrees differ");
    TruncatedSeries s(degree());
    for (std::size_t a = 0; a < coeff_.size(); ++a) {
        if (coeff_[a] == 0) continue;
        for (std::size_t b = 0; a + b < coeff_.size(); ++b)
            s.coeff_[a + b] += coeff_[a] * o.coeff_[b];
    }
    return s;
}

ContentWeights::ContentWeights(std::map<int, Rational> weights) : w_(std::move(weights)) {
    for (const auto& [c, q] : w_)
        if (q <= 0) throw NonPositiveWeight("content weights must be positive");
}

ContentWeights ContentWeights::ones(const Partition& shape) {
    std::map<int, Rational> w;
    for (int c = -(shape.rows() - 1); c <= shape.max_col() - 1; ++c) w[c] = 1;
    if (shape.empty()) w[0] = 1;
    return ContentWeights(std::move(w));
}

const Rational& ContentWeights::at(int content) const {
    auto it = w_.find(content);
    if (it == w_.end())
        throw MissingWeight("no weight for content " + std::to_string(content));
    return it->second;
}

void ContentWeights::require_cover(const Partition& shape) const {
    if (shape.empty()) return;
    for (int c = -(shape.rows() - 1); c <= shape.max_col() - 1; ++c)
        if (!w_.contains(c))
            throw MissingWeight("no weight for content " + std::to_string(c));
}

bool ContentWeights::integer_valued() const {
    for (const auto& [c, q] : w_)
        if (q.get_den() != 1) return false;
    return true;
}

} // namespace rsk
