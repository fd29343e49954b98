#include "seqc/theory.hpp"

#include <stdexcept>

namespace seqc {
namespace {

__extension__ typedef __int128 i128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require_k(std::uint32_t k) {
    if (k == 0 || k > 30) throw std::invalid_argument("pattern length k must be in 1..30");
}

} // namespace

std::int64_t Rational::floor() const noexcept { return floor_div(num, den); }
std::int64_t Rational::ceil() const noexcept { return -floor_div(-num, den); }

bool operator<=(const Rational& r, std::int64_t v) noexcept { return i128{r.num} <= i128{v} * r.den; }
bool operator<=(std::int64_t v, const Rational& r) noexcept { return i128{v} * r.den <= i128{r.num}; }

BoundPair general_bounds(std::uint32_t d, std::int64_t m, std::int64_t n) {
    if (d == 0) throw std::invalid_argument("general_bounds: d must be >= 1");
    if (n < 1) throw std::invalid_argument("general_bounds: N must be >= 1");
    const std::int64_t dd = d;
    return {{n - m, dd}, {(dd - 1) * n + m + 1, dd}, d, m, n};
}

std::int64_t allones_exact(std::uint32_t k, std::int64_t n) {
    require_k(k);
    if (n < 1) throw std::invalid_argument("allones_exact: N must be >= 1");
    const std::int64_t two_k = std::int64_t{1} << k;
    const std::int64_t t = two_k - 1;
    const std::int64_t r = n % (4 * t);
    if (two_k <= r && r <= 3 * t) return 2 * t * (n / (4 * t)) + two_k;
    return 2 * t * ((n + two_k - 2) / (4 * t));
}

std::int64_t thue_morse_exact(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("thue_morse_exact: N must be >= 1");
    return 2 * ((n + 2) / 4);
}

std::int64_t perfect_profile_exact(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("perfect_profile_exact: N must be >= 1");
    return (n + 1) / 2;
}

Poly cf_prediction(std::uint32_t k, std::size_t j) {
    require_k(k);
    if (j == 0) throw std::invalid_argument("cf_prediction: j must be >= 1");
    const PrimeField f2(2);
    const std::size_t two_k = std::size_t{1} << k;
    if (k == 1) return j == 1 ? Poly(f2, {1, 1, 1}) : Poly(f2, {1, 0, 1});
    std::vector<FieldElem> c(two_k + 1, 0);
    if (j == 1) {
        c[1] = c[two_k] = 1;
    } else if (j % 2 == 0) {
        c.resize(two_k - 1);
        for (std::size_t i = 0; i < two_k - 1; i += 2) c[i] = 1;
    } else {
        c[0] = c[two_k] = 1;
    }
    return Poly(f2, std::move(c));
}

} // namespace seqc
