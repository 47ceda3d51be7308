#include "jumpform/characteristic.hpp"

#include <algorithm>
#include <cstdint>

#include "jumpform/errors.hpp"

namespace jumpform {

namespace {

// Packed GF(2) rows; column n holds the right-hand side.
struct Gf2Augmented {
    std::size_t n;
    std::size_t words;
    std::vector<std::vector<std::uint64_t>> rows;

    explicit Gf2Augmented(std::size_t n_)
        : n(n_), words((n_ + 1 + 63) / 64), rows(n_, std::vector<std::uint64_t>(words, 0)) {}

    bool get(std::size_t r, std::size_t c) const { return (rows[r][c >> 6] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c) { rows[r][c >> 6] |= std::uint64_t(1) << (c & 63); }
    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w) rows[dst][w] ^= rows[src][w];
    }
    bool coeffs_zero(std::size_t r) const {
        for (std::size_t c = 0; c < n; ++c)
            if (get(r, c)) return false;
        return true;
    }
};

}  // namespace

bool is_characteristic(const IntegerForm& form, const HomologyClass& xi) {
    if (xi.size() != form.rank())
        throw DimensionMismatchError("is_characteristic: vector length " +
                                     std::to_string(xi.size()) + " does not match form rank " +
                                     std::to_string(form.rank()));
    for (std::size_t i = 0; i < form.rank(); ++i) {
        Int row = 0;
        for (std::size_t j = 0; j < form.rank(); ++j) row += form.at(i, j) * xi[j];
        if (!is_even(row - form.at(i, i))) return false;
    }
    return true;
}

CharacteristicCoset find_characteristic(const IntegerForm& form) {
    const std::size_t n = form.rank();
    Gf2Augmented sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (!is_even(form.at(i, j))) sys.set(i, j);
        if (!is_even(form.at(i, i))) sys.set(i, n);  // rhs = diag mod 2
    }

    // Gauss-Jordan over GF(2)
    std::vector<std::ptrdiff_t> pivot_row_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && !sys.get(p, c)) ++p;
        if (p == n) continue;
        std::swap(sys.rows[p], sys.rows[r]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && sys.get(i, c)) sys.xor_rows(i, r);
        pivot_row_of_col[c] = static_cast<std::ptrdiff_t>(r);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (sys.get(i, n) && sys.coeffs_zero(i))
            throw NoSolutionError("mod-2 system Q*xi = diag(Q) is inconsistent");

    CharacteristicCoset out;
    out.base = HomologyClass::zero(n);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row_of_col[c] >= 0 && sys.get(static_cast<std::size_t>(pivot_row_of_col[c]), n))
            out.base[c] = 1;

    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row_of_col[f] >= 0) continue;
        HomologyClass k = HomologyClass::zero(n);
        k[f] = 1;
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_row_of_col[c] >= 0 &&
                sys.get(static_cast<std::size_t>(pivot_row_of_col[c]), f))
                k[c] = 1;
        out.kernel_basis.push_back(std::move(k));
    }

    out.unimodular = is_unimodular(form);
    return out;
}

std::vector<HomologyClass> enumerate_characteristic(const IntegerForm& form, int max_abs_coord) {
    const std::size_t n = form.rank();
    if (n > 12)
        throw SizeLimitError("enumerate_characteristic: rank " + std::to_string(n) +
                             " exceeds the guard (12)");
    if (max_abs_coord < 0 || max_abs_coord > 5)
        throw SizeLimitError("enumerate_characteristic: max_abs_coord " +
                             std::to_string(max_abs_coord) + " exceeds the guard (5)");

    const CharacteristicCoset coset = find_characteristic(form);
    const std::size_t kdim = coset.kernel_basis.size();

    std::vector<HomologyClass> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << kdim); ++mask) {
        std::vector<int> pattern(n, 0);
        for (std::size_t c = 0; c < n; ++c) pattern[c] = coset.base[c] == 1 ? 1 : 0;
        for (std::size_t b = 0; b < kdim; ++b)
            if ((mask >> b) & 1)
                for (std::size_t c = 0; c < n; ++c)
                    pattern[c] ^= coset.kernel_basis[b][c] == 1 ? 1 : 0;

        // per-coordinate values matching the mod-2 pattern, ascending
        std::vector<std::vector<Int>> values(n);
        bool feasible = true;
        for (std::size_t c = 0; c < n; ++c) {
            for (int v = -max_abs_coord; v <= max_abs_coord; ++v)
                if (((v % 2) + 2) % 2 == pattern[c]) values[c].emplace_back(v);
            if (values[c].empty()) feasible = false;
        }
        if (!feasible || n == 0) {
            if (n == 0) result.push_back(HomologyClass{});
            continue;
        }

        std::vector<std::size_t> idx(n, 0);
        while (true) {
            HomologyClass xi = HomologyClass::zero(n);
            for (std::size_t c = 0; c < n; ++c) xi[c] = values[c][idx[c]];
            if (!is_characteristic(form, xi))
                throw NoSolutionError("internal error: enumerated vector is not characteristic");
            result.push_back(std::move(xi));
            std::size_t c = n;
            while (c > 0) {
                --c;
                if (++idx[c] < values[c].size()) break;
                idx[c] = 0;
                if (c == 0) goto pattern_done;
            }
        }
    pattern_done:;
    }

    std::sort(result.begin(), result.end(), [](const HomologyClass& a, const HomologyClass& b) {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                            b.coords.end());
    });
    return result;
}

C1Report validate_c1_almost_complex(const IntegerForm& form, const HomologyClass& c1) {
    if (c1.size() != form.rank())
        throw DimensionMismatchError("validate_c1_almost_complex: vector length does not match rank");
    const Inertia in = inertia(form);
    if (in.b_zero != 0)
        throw DegenerateFormError("validate_c1_almost_complex requires a nondegenerate form");

    C1Report rep;
    rep.characteristic = is_characteristic(form, c1);
    const Int chi = 2 + in.b_plus + in.b_minus;
    const Int sigma = in.signature();
    rep.wu_identity = self_intersection(form, c1) == 2 * chi + 3 * sigma;
    return rep;
}

}  // namespace jumpform
