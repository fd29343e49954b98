#include "seqc/expcomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqc {
namespace {

struct Column {
    std::uint32_t i;
    std::uint32_t j;
};

std::vector<Column> monomials_up_to(std::uint32_t d) {
    std::vector<Column> cols;
    for (std::uint32_t i = 0; i <= d; ++i) {
        for (std::uint32_t j = 0; i + j <= d; ++j) cols.push_back({i, j});
    }
    return cols;
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<FieldElem>>& m, std::size_t cols, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const FieldElem inv = f.inv(m[row][c]);
        for (auto& v : m[row]) v = f.mul(v, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const FieldElem factor = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Kernel vector of the first non-pivot column, or empty when the columns are independent.
std::vector<FieldElem> first_kernel_vector(std::vector<std::vector<FieldElem>> m, std::size_t cols,
                                           const PrimeField& f) {
    const auto pivots = rref(m, cols, f);
    std::size_t free_col = 0;
    while (free_col < pivots.size() && pivots[free_col] == free_col) ++free_col;
    if (free_col == cols) return {};
    std::vector<FieldElem> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size() && pivots[r] < free_col; ++r) v[pivots[r]] = f.neg(m[r][free_col]);
    return v;
}

void check_prefix(std::span<const FieldElem> prefix, const PrimeField& field) {
    if (prefix.empty()) throw std::invalid_argument("expansion complexity needs a nonempty prefix");
    for (FieldElem u : prefix) {
        if (!field.contains(u)) throw std::invalid_argument("symbol outside the field");
    }
}

ExpansionResult search(std::span<const FieldElem> prefix, const PrimeField& f, std::uint32_t d_max) {
    const std::size_t n = prefix.size();
    ExpansionResult res;
    res.n = n;
    if (std::all_of(prefix.begin(), prefix.end(), [](FieldElem u) { return u == 0; })) {
        res.e = 0;
        return res;
    }
    const Poly g(f, std::vector<FieldElem>(prefix.begin(), prefix.end()));
    std::vector<Poly> powers{Poly::constant(f, 1)};
    for (std::uint32_t d = 1; d <= d_max; ++d) {
        powers.push_back(mul_trunc(powers.back(), g, n));
        const auto cols = monomials_up_to(d);
        std::vector<std::vector<FieldElem>> m(n, std::vector<FieldElem>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Poly& gi = powers[cols[c].i];
            for (std::size_t k = 0; k < gi.size() && k + cols[c].j < n; ++k) m[k + cols[c].j][c] = gi[k];
        }
        const auto v = first_kernel_vector(std::move(m), cols.size(), f);
        if (v.empty()) continue;
        res.status = ExpansionStatus::found;
        res.e = d;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (v[c] != 0) res.witness.push_back({cols[c].i, cols[c].j, v[c]});
        }
        return res;
    }
    res.status = ExpansionStatus::cap_exceeded;
    return res;
}

} // namespace

const char* status_name(ExpansionStatus s) noexcept {
    switch (s) {
        case ExpansionStatus::zero_prefix: return "zero_prefix";
        case ExpansionStatus::found: return "found";
        case ExpansionStatus::cap_exceeded: return "cap_exceeded";
    }
    return "unknown";
}

ExpansionResult expansion_complexity(std::span<const FieldElem> prefix, const PrimeField& field, std::uint32_t d_max) {
    check_prefix(prefix, field);
    if (d_max == 0) throw std::invalid_argument("degree cap must be at least 1");
    return search(prefix, field, d_max);
}

std::vector<ExpansionResult> expansion_profile(std::span<const FieldElem> prefix, const PrimeField& field,
                                               std::uint32_t d_max) {
    check_prefix(prefix, field);
    if (d_max == 0) throw std::invalid_argument("degree cap must be at least 1");
    std::vector<ExpansionResult> out;
    out.reserve(prefix.size());
    for (std::size_t n = 1; n <= prefix.size(); ++n) out.push_back(search(prefix.first(n), field, d_max));
    return out;
}

Poly evaluate_witness(std::span<const Monomial> h, std::span<const FieldElem> prefix, const PrimeField& field) {
    check_prefix(prefix, field);
    const std::size_t n = prefix.size();
    const Poly g(field, std::vector<FieldElem>(prefix.begin(), prefix.end()));
    Poly acc(field);
    for (const Monomial& mono : h) {
        if (mono.j >= n || mono.c == 0) continue;
        acc += (pow_mod_tN(g, mono.i, n) * mono.c).shifted(mono.j).truncated(n);
    }
    return acc;
}

} // namespace seqc
