#pragma once

#include <vector>

#include <gmpxx.h>

#include "hopfkiss/configuration.hpp"

namespace hopfkiss {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Basis, Gram matrix and invariants of the lattice spanned by a point set.
struct LatticeReport {
    std::size_t rank = 0;
    /// rank x ambient_dim, exact coordinates of the scaled lattice basis.
    std::vector<Point> basis;
    IntegerMatrix gram;
    mpz_class determinant;
    bool even = false;
};

/**
 * Lattice generated by scale * points.
 *
 * Picks a maximal independent subset, writes every point in those
 * coordinates, and reduces the integer span of the coefficient vectors to
 * Hermite normal form. Throws InputError when the scaled Gram matrix is not
 * integral or the points do not span the ambient space.
 */
LatticeReport gram_and_basis(const Configuration& config, const ExactScalar& scale);

/// Smallest s with s^2 = lcm of the denominators of all pairwise dots, so
/// scale * points has an integral Gram matrix. Throws FieldOverflow if s is
/// not in Q(sqrt 2) and InputError if some dot is irrational.
ExactScalar integral_scale(const std::vector<ExactScalar>& dot_values);

/// Row-style Hermite normal form of the integer row span (zero rows dropped).
IntegerMatrix hermite_normal_form(const IntegerMatrix& rows, std::size_t columns);

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class bareiss_determinant(IntegerMatrix m);

}  // namespace hopfkiss
