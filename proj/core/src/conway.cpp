#include "bandix/conway.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace bandix {

using boost::multiprecision::cpp_int;

namespace {

// Dense integer polynomials in one variable, ascending, trailing zeros
// trimmed. Used only inside the determinant computation.
using Poly = std::vector<cpp_int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), cpp_int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, cpp_int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// Exact division in Z[t]; the fraction-free elimination below only divides
// when the quotient lies in Z[t].
Poly exact_div(Poly a, const Poly& b) {
    if (b.empty()) throw InternalError("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw InternalError("inexact polynomial division");
    Poly q(a.size() - b.size() + 1, cpp_int(0));
    for (size_t k = q.size(); k-- > 0;) {
        cpp_int lead = a[k + b.size() - 1];
        if (lead == 0) continue;
        if (lead % b.back() != 0) throw InternalError("inexact polynomial division");
        cpp_int coef = lead / b.back();
        q[k] = coef;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= coef * b[i];
    }
    for (const cpp_int& r : a)
        if (r != 0) throw InternalError("inexact polynomial division");
    return q;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    if (n == 0) return Poly{cpp_int(1)};
    Poly prev{cpp_int(1)};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].empty()) ++pivot;
            if (pivot == n) return {};
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (sign < 0)
        for (cpp_int& c : det) c = -c;
    return det;
}

struct Loop {
    int gen;  // generator index i (edge between strands i, i+1)
    int a, b; // word positions of the consecutive occurrences, a < b
    int ea, eb;
};

}  // namespace

SeifertMatrix seifert_matrix_from_braid(const BraidWord& w) {
    {
        std::vector<char> present(static_cast<size_t>(w.strands), 0);
        for (int e : w.letters) present[static_cast<size_t>(std::abs(e))] = 1;
        for (int i = 1; i < w.strands; ++i)
            if (!present[static_cast<size_t>(i)])
                throw DisconnectedDiagram("generator " + std::to_string(i) +
                                          " never occurs; the closure diagram is disconnected");
    }

    std::vector<Loop> loops;
    for (int gen = 1; gen < w.strands; ++gen) {
        int prev_pos = -1, prev_sign = 0;
        for (int pos = 0; pos < static_cast<int>(w.letters.size()); ++pos) {
            int e = w.letters[static_cast<size_t>(pos)];
            if (std::abs(e) != gen) continue;
            int sign = e > 0 ? 1 : -1;
            if (prev_pos >= 0) loops.push_back({gen, prev_pos, pos, prev_sign, sign});
            prev_pos = pos;
            prev_sign = sign;
        }
    }
    const int m = static_cast<int>(loops.size());

    SeifertMatrix mat;
    mat.size = m;
    mat.entries.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    auto set = [&](int r, int c, int v) {
        mat.entries[static_cast<size_t>(r) * static_cast<size_t>(m) + static_cast<size_t>(c)] = v;
    };

    // Local linking rules of the fundamental loops, with orientations pinned
    // by the skein relation and the anchor values (see the test suite):
    //   - a loop with itself: -(sum of its two crossing signs)/2;
    //   - consecutive loops on one generator, shared crossing sign eps:
    //     (eps-1)/2 above the diagonal, (eps+1)/2 below;
    //   - loops on adjacent generators link once when their word intervals
    //     interleave: -1 when the lower-generator loop starts first, +1 when
    //     it starts second, in the row of the lower-generator loop.
    // All other pairs are unlinked.
    for (int p = 0; p < m; ++p) set(p, p, -(loops[p].ea + loops[p].eb) / 2);

    for (int p = 0; p < m; ++p) {
        for (int q = p + 1; q < m; ++q) {
            const Loop& lp = loops[static_cast<size_t>(p)];
            const Loop& lq = loops[static_cast<size_t>(q)];
            if (lp.gen == lq.gen && lp.b == lq.a) {
                int eps = lp.eb;
                set(p, q, (eps - 1) / 2);
                set(q, p, (eps + 1) / 2);
            } else if (std::abs(lp.gen - lq.gen) == 1) {
                const Loop& lo = lp.gen < lq.gen ? lp : lq;
                const Loop& hi = lp.gen < lq.gen ? lq : lp;
                int v_lo_hi = 0;
                if (lo.a < hi.a && hi.a < lo.b && lo.b < hi.b)
                    v_lo_hi = -1;
                else if (hi.a < lo.a && lo.a < hi.b && hi.b < lo.b)
                    v_lo_hi = 1;
                else
                    continue;
                if (&lo == &lp)
                    set(p, q, v_lo_hi);
                else
                    set(q, p, v_lo_hi);
            }
        }
    }
    return mat;
}

ConwayPolynomial conway_from_seifert(const SeifertMatrix& a) {
    const int m = a.size;
    if (static_cast<int>(a.entries.size()) != m * m)
        throw InvalidInput("Seifert matrix entries do not match its size");
    if (m == 0) return ConwayPolynomial({1});

    // det(x^-1 A - x A^T) = x^-m det(A - t A^T) with t = x^2.
    std::vector<std::vector<Poly>> matrix(static_cast<size_t>(m),
                                          std::vector<Poly>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Poly entry{cpp_int(a.at(i, j)), cpp_int(-a.at(j, i))};
            trim(entry);
            matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(entry);
        }
    }
    Poly p = bareiss_determinant(std::move(matrix));

    // Laurent coefficients of x: exponent 2k - m carries p[k].
    std::vector<cpp_int> laurent(2 * static_cast<size_t>(m) + 1, cpp_int(0));
    for (size_t k = 0; k < p.size(); ++k) laurent[2 * k] = p[k];

    // Rewrite in z = x - x^-1 by repeated leading-term division.
    std::vector<cpp_int> coeffs(static_cast<size_t>(m) + 1, cpp_int(0));
    for (int d = m; d >= 0; --d) {
        cpp_int c = laurent[static_cast<size_t>(d + m)];
        if (c == 0) continue;
        coeffs[static_cast<size_t>(d)] = c;
        cpp_int binom = 1;
        for (int k = 0; k <= d; ++k) {
            cpp_int term = c * binom;
            if (k % 2 != 0) term = -term;
            laurent[static_cast<size_t>(d - 2 * k + m)] -= term;
            binom = binom * (d - k) / (k + 1);
        }
    }
    for (const cpp_int& r : laurent)
        if (r != 0)
            throw NotRepresentable(
                "determinant is not a polynomial in z = x - 1/x; "
                "the input is not a Seifert linking form");

    std::vector<long long> out(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > std::numeric_limits<long long>::max() ||
            coeffs[i] < std::numeric_limits<long long>::min())
            throw RangeError("Conway coefficient exceeds the 64-bit range");
        out[i] = static_cast<long long>(coeffs[i]);
    }
    return ConwayPolynomial(std::move(out));
}

ConwayPolynomial::ConwayPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long ConwayPolynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(d)];
}

ConwayPolynomial ConwayPolynomial::times_z() const {
    if (is_zero()) return {};
    std::vector<long long> out(coeffs_.size() + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i];
    return ConwayPolynomial(std::move(out));
}

std::string ConwayPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        long long c = coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long mag = std::abs(c);
        if (d == 0)
            os << mag;
        else {
            if (mag != 1) os << mag << "*";
            os << "z";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

ConwayPolynomial operator-(const ConwayPolynomial& a, const ConwayPolynomial& b) {
    std::vector<long long> out(
        static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return ConwayPolynomial(std::move(out));
}

std::optional<int> flat2_form_check(const ConwayPolynomial& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() == 0) return p.coeff(0) == 1 ? std::optional<int>(0) : std::nullopt;
    if (p.degree() != 2 || p.coeff(0) != 1 || p.coeff(1) != 0) return std::nullopt;
    long long target = -p.coeff(2);  // k(k+1)
    if (target <= 0) return std::nullopt;
    long long guess = static_cast<long long>((std::sqrt(4.0 * static_cast<double>(target) + 1.0) - 1.0) / 2.0);
    for (long long k = std::max(0LL, guess - 2); k <= guess + 2; ++k) {
        if (static_cast<__int128>(k) * (k + 1) == target) return static_cast<int>(k);
    }
    return std::nullopt;
}

int conway_degree_genus_bound(const ConwayPolynomial& p, int l) {
    if (l < 1) throw RangeError("component count must be positive");
    if (p.is_zero()) return 0;
    int v = p.degree() - l + 1;
    if (v <= 0) return 0;
    return (v + 1) / 2;
}

std::optional<int> band_index_one_check(const BraidWord& w) {
    BraidWord r = free_reduce(w);
    if (r.strands != 2) return std::nullopt;
    // A reduced word on one generator is a pure power.
    int k = 0;
    for (int e : r.letters) k += (e > 0) ? 1 : -1;
    if (static_cast<size_t>(std::abs(k)) != r.letters.size()) return std::nullopt;
    if (k == 0 || k % 2 != 0) return std::nullopt;
    return k / 2;
}

}  // namespace bandix
