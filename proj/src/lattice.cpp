#include "jumpform/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "jumpform/errors.hpp"

namespace jumpform {

namespace {

void require_rank(const IntegerForm& form, const HomologyClass& x, const char* what) {
    if (x.size() != form.rank())
        throw DimensionMismatchError(std::string(what) + ": vector length " +
                                     std::to_string(x.size()) + " does not match form rank " +
                                     std::to_string(form.rank()));
}

}  // namespace

IntegerForm::IntegerForm(const std::vector<std::vector<Int>>& rows) {
    rank_ = rows.size();
    gram_.resize(rank_ * rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (rows[i].size() != rank_)
            throw MalformedInputError("gram matrix is not square: row " + std::to_string(i) +
                                      " has " + std::to_string(rows[i].size()) + " entries, rank is " +
                                      std::to_string(rank_));
        for (std::size_t j = 0; j < rank_; ++j) gram_[i * rank_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (at(i, j) != at(j, i))
                throw MalformedInputError("gram matrix is not symmetric at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
}

IntegerForm IntegerForm::zero(std::size_t rank) {
    IntegerForm f;
    f.rank_ = rank;
    f.gram_.assign(rank * rank, Int(0));
    return f;
}

void IntegerForm::set(std::size_t i, std::size_t j, Int v) {
    gram_[i * rank_ + j] = v;
    gram_[j * rank_ + i] = std::move(v);
}

std::vector<std::vector<Int>> IntegerForm::rows() const {
    std::vector<std::vector<Int>> out(rank_, std::vector<Int>(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) out[i][j] = at(i, j);
    return out;
}

Int pairing(const IntegerForm& form, const HomologyClass& x, const HomologyClass& y) {
    require_rank(form, x, "pairing");
    require_rank(form, y, "pairing");
    Int acc = 0;
    for (std::size_t i = 0; i < form.rank(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < form.rank(); ++j) row += form.at(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Int self_intersection(const IntegerForm& form, const HomologyClass& x) {
    require_rank(form, x, "self_intersection");
    return pairing(form, x, x);
}

Inertia inertia(const IntegerForm& form) {
    const std::size_t n = form.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(form.at(i, j));

    auto swap_sym = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    // congruence adding row/col j into i; turns a zero diagonal into 2*a[i][j]
    auto add_sym = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t d = k;
            while (d < n && a[d][d] == 0) ++d;
            if (d < n) {
                swap_sym(k, d);
            } else {
                bool found = false;
                for (std::size_t i = k; i < n && !found; ++i)
                    for (std::size_t j = i + 1; j < n && !found; ++j)
                        if (a[i][j] != 0) {
                            add_sym(i, j);
                            swap_sym(k, i);
                            found = true;
                        }
                if (!found) break;  // remaining block is identically zero
            }
        }
        const Rat pivot = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rat f = a[i][k] / pivot;
            for (std::size_t c = 0; c < n; ++c) a[i][c] -= f * a[k][c];
            for (std::size_t r = 0; r < n; ++r) a[r][i] -= f * a[r][k];
        }
    }

    Inertia result;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] > 0)
            ++result.b_plus;
        else if (a[k][k] < 0)
            ++result.b_minus;
        else
            ++result.b_zero;
    }
    return result;
}

Int determinant(const IntegerForm& form) {
    const std::size_t n = form.rank();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m = form.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool is_unimodular(const IntegerForm& form) {
    const Int d = determinant(form);
    return d == 1 || d == -1;
}

Parity parity(const IntegerForm& form) {
    for (std::size_t i = 0; i < form.rank(); ++i)
        if (!is_even(form.at(i, i))) return Parity::Odd;
    return Parity::Even;
}

IntegerForm direct_sum(const std::vector<IntegerForm>& forms) {
    std::size_t total = 0;
    for (const auto& f : forms) total += f.rank();
    IntegerForm out = IntegerForm::zero(total);
    std::size_t off = 0;
    for (const auto& f : forms) {
        for (std::size_t i = 0; i < f.rank(); ++i)
            for (std::size_t j = i; j < f.rank(); ++j) out.set(off + i, off + j, f.at(i, j));
        off += f.rank();
    }
    return out;
}

IntegerForm diagonal_form(std::size_t plus, std::size_t minus) {
    IntegerForm out = IntegerForm::zero(plus + minus);
    for (std::size_t i = 0; i < plus; ++i) out.set(i, i, 1);
    for (std::size_t i = 0; i < minus; ++i) out.set(plus + i, plus + i, -1);
    return out;
}

IntegerForm hyperbolic_form() {
    return IntegerForm({{Int(0), Int(1)}, {Int(1), Int(0)}});
}

IntegerForm e8_form() {
    // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4; even, positive
    // definite, determinant 1.
    IntegerForm out = IntegerForm::zero(8);
    for (std::size_t i = 0; i < 8; ++i) out.set(i, i, 2);
    for (std::size_t i = 0; i + 1 < 7; ++i) out.set(i, i + 1, -1);
    out.set(4, 7, -1);
    return out;
}

IntegerForm neg_e8_form() {
    IntegerForm e8 = e8_form();
    IntegerForm out = IntegerForm::zero(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i; j < 8; ++j) out.set(i, j, -e8.at(i, j));
    return out;
}

std::string CanonicalDecomposition::description() const {
    if (form_parity == Parity::Odd)
        return std::to_string(diag_plus) + "<1> + " + std::to_string(diag_minus) + "<-1>";
    std::string s;
    if (e8_blocks != 0) {
        s = e8_blocks < 0 ? "-" + std::to_string(-e8_blocks) + " E8" : std::to_string(e8_blocks) + " E8";
        s += " + ";
    }
    return s + std::to_string(h_blocks) + " H";
}

CanonicalDecomposition classify_indefinite_unimodular(const IntegerForm& form) {
    if (!is_unimodular(form))
        throw UnsupportedClassificationError(
            "classification requires a unimodular form (determinant +-1)");
    const Inertia in = inertia(form);
    if (in.b_plus == 0 || in.b_minus == 0)
        throw UnsupportedClassificationError(
            "classification requires an indefinite form (b+ >= 1 and b- >= 1)");

    CanonicalDecomposition out;
    out.form_parity = parity(form);
    if (out.form_parity == Parity::Odd) {
        out.diag_plus = in.b_plus;
        out.diag_minus = in.b_minus;
        out.representative =
            diagonal_form(static_cast<std::size_t>(in.b_plus), static_cast<std::size_t>(in.b_minus));
    } else {
        const std::int64_t sig = in.signature();
        if (sig % 8 != 0)
            throw UnsupportedClassificationError(
                "even unimodular form with signature not divisible by 8; input is not a valid "
                "integral lattice");
        out.e8_blocks = sig / 8;
        out.h_blocks = in.b_plus < in.b_minus ? in.b_plus : in.b_minus;
        std::vector<IntegerForm> parts;
        const IntegerForm block = sig >= 0 ? e8_form() : neg_e8_form();
        for (std::int64_t i = 0; i < std::llabs(out.e8_blocks); ++i) parts.push_back(block);
        for (std::int64_t i = 0; i < out.h_blocks; ++i) parts.push_back(hyperbolic_form());
        out.representative = direct_sum(parts);
    }

    // Canonical representative must reproduce the input invariants exactly.
    if (out.representative.rank() != form.rank() || inertia(out.representative) != in ||
        parity(out.representative) != out.form_parity)
        throw UnsupportedClassificationError(
            "internal error: canonical representative does not match input invariants");
    return out;
}

}  // namespace jumpform
