#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandix/braid.hpp"
#include "bandix/errors.hpp"

namespace bandix {

/// Seifert linking form of the canonical surface of a braid closure, in the
/// basis of fundamental loops (one per pair of consecutive occurrences of
/// the same generator).
struct SeifertMatrix {
    int size = 0;
    std::vector<int> entries;  // row-major

    int at(int r, int c) const { return entries[static_cast<size_t>(r) * size + c]; }
};

/// Integer polynomial in z, coefficients ascending with trailing zeros
/// trimmed. The zero polynomial has no coefficients.
class ConwayPolynomial {
public:
    ConwayPolynomial() = default;
    explicit ConwayPolynomial(std::vector<long long> coeffs);

    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(int d) const;

    /// Multiplication by z.
    ConwayPolynomial times_z() const;

    std::string to_string() const;

    bool operator==(const ConwayPolynomial&) const = default;

private:
    std::vector<long long> coeffs_;
};

ConwayPolynomial operator-(const ConwayPolynomial& a, const ConwayPolynomial& b);

/// Seifert matrix of the canonical surface of the closure of `w`, one basis
/// loop per pair of consecutive occurrences of the same generator. Entries
/// are the Seifert linking numbers of the loops with their push-offs.
/// Throws DisconnectedDiagram when some generator never occurs.
SeifertMatrix seifert_matrix_from_braid(const BraidWord& w);

/// Conway polynomial det(x^-1 A - x A^T) rewritten in z = x - x^-1, by
/// exact integer arithmetic. The rewrite must terminate with zero
/// remainder; a nonzero remainder raises NotRepresentable.
ConwayPolynomial conway_from_seifert(const SeifertMatrix& a);

/// Least k >= 0 with p = 1 - k(k+1) z^2, or nullopt. Knots whose Conway
/// polynomial is not of this form cannot bound a flat two-banded surface.
std::optional<int> flat2_form_check(const ConwayPolynomial& p);

/// Genus lower bound max(0, ceil((deg p - l + 1) / 2)) from
/// deg p <= 2g + l - 1. Returns 0 for the zero polynomial.
int conway_degree_genus_bound(const ConwayPolynomial& p, int l);

/// Returns n != 0 when the free reduction of `w` is the two-strand word
/// sigma_1^(2n); such closures have band index exactly 1. Absence certifies
/// nothing.
std::optional<int> band_index_one_check(const BraidWord& w);

}  // namespace bandix
