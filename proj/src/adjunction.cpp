#include "jumpform/adjunction.hpp"

#include <string>

#include "jumpform/errors.hpp"

namespace jumpform {

namespace {

std::string istr(const Int& x) { return x.str(); }

Int halve_even(const Int& numerator, const char* context) {
    if (!is_even(numerator))
        throw ParityError(std::string(context) + ": numerator " + istr(numerator) +
                          " is odd; the data cannot come from a characteristic c1");
    return numerator / 2;
}

}  // namespace

SurfaceGeometry::SurfaceGeometry(Int g, Int c, Int n)
    : genus(std::move(g)), c1f(std::move(c)), fc(std::move(n)) {
    if (genus < 0)
        throw MalformedInputError("SurfaceGeometry: genus " + istr(genus) + " is negative");
}

Int jump_count(const Int& genus, const Int& ff, const Int& c1f) {
    if (genus < 0) throw MalformedInputError("jump_count: genus " + istr(genus) + " is negative");
    return halve_even(2 - 2 * genus + ff - c1f, "jump_count");
}

Int genus_from(const Int& ff, const Int& c1f, const Int& fc) {
    const Int g = halve_even(2 + ff - c1f - 2 * fc, "genus_from");
    if (g < 0)
        throw InfeasibleGeometryError("genus_from: genus " + istr(g) +
                                      " is negative; no smooth surface has this data");
    return g;
}

Int self_int_from_geometry(const SurfaceGeometry& d) {
    return 2 * d.genus - 2 + d.c1f + 2 * d.fc;
}

Int pairing_from_geometry(const SurfaceGeometry& d_f, const SurfaceGeometry& d_g,
                          const SurfaceGeometry& d_fg) {
    const Int num =
        self_int_from_geometry(d_fg) - self_int_from_geometry(d_f) - self_int_from_geometry(d_g);
    if (!is_even(num))
        throw ParityError("pairing_from_geometry: numerator " + istr(num) +
                          " is odd; the three records cannot belong to classes F, G, F+G in one "
                          "form with characteristic c1");
    return num / 2;
}

ReconstructionResult reconstruct_gram(const ReconstructionInput& input) {
    const std::size_t n = input.basis.size();
    if (n == 0) throw MalformedInputError("reconstruct_gram: basis_data is empty");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!input.pairs.count({i, j}))
                throw MalformedInputError("reconstruct_gram: missing pair data for (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");

    IntegerForm q = IntegerForm::zero(n);
    for (std::size_t i = 0; i < n; ++i) q.set(i, i, self_int_from_geometry(input.basis[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            try {
                q.set(i, j, pairing_from_geometry(input.basis[i], input.basis[j],
                                                  input.pairs.at({i, j})));
            } catch (const ParityError& e) {
                throw ParityError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                  "): " + e.what());
            }
        }

    ReconstructionResult out;
    out.unimodular = is_unimodular(q);
    out.form = std::move(q);
    return out;
}

Int chern_eval(const IntegerForm& form, const HomologyClass& c1, const HomologyClass& f) {
    return pairing(form, c1, f);
}

bool lai_dim4_check(const Int& genus, const Int& ff, const Int& c1f, const Int& count) {
    return (2 - 2 * genus) + ff - c1f == 2 * count;
}

}  // namespace jumpform
