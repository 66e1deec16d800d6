#pragma once

#include <array>
#include <stdexcept>

#include "kauffman/ratfunc.hpp"

namespace kauffman {

struct basis_mismatch : std::logic_error {
    basis_mismatch() : std::logic_error("skein vectors expressed in different bases") {}
};

/// Spanning diagrams of the skein space of the ball with four marked boundary
/// points: two vertical strands (identity for concatenation), two horizontal
/// strands (identity for juxtaposition), and the left-hand crossing.
enum class Gen { Id = 0, CupCap = 1, Sigma = 2 };

enum class Basis { Gen, IdempV, IdempH };

/// Element of the skein space as a coordinate triple over a tagged basis.
class SkeinVector {
public:
    SkeinVector() : basis_(Basis::Gen), c_{RatFunc(0), RatFunc(0), RatFunc(0)} {}
    SkeinVector(Basis basis, std::array<RatFunc, 3> coords)
        : basis_(basis), c_(std::move(coords)) {}

    static SkeinVector generator(Gen g) {
        SkeinVector v;
        v.c_[static_cast<int>(g)] = RatFunc(1);
        return v;
    }

    Basis basis() const { return basis_; }
    const RatFunc& operator[](int i) const { return c_[i]; }
    const std::array<RatFunc, 3>& coords() const { return c_; }

    SkeinVector operator+(const SkeinVector& o) const;
    SkeinVector operator-(const SkeinVector& o) const;
    SkeinVector operator*(const RatFunc& k) const;
    bool operator==(const SkeinVector& o) const;
    bool is_zero() const;

private:
    Basis basis_;
    std::array<RatFunc, 3> c_;
};

inline SkeinVector operator*(const RatFunc& k, const SkeinVector& v) { return v * k; }

/// Concatenation (stacking) product. Both operands must be in the Gen basis.
SkeinVector dot(const SkeinVector& u, const SkeinVector& v);

/// Juxtaposition (side-by-side) product. Both operands must be in the Gen basis.
SkeinVector cross(const SkeinVector& u, const SkeinVector& v);

/// The 90-degree rotation of the ball, as a linear involution in Gen
/// coordinates. Intertwines the two products: cross(R u, R v) = R dot(u, v).
SkeinVector rotate(const SkeinVector& v);

/// The inverse crossing expanded over the generators:
/// Sigma - (s - 1/s) Id + (s - 1/s) CupCap.
SkeinVector sigma_inverse();

/// The rotated crossing (right-hand crossing) in Gen coordinates; equals
/// sigma_inverse() since the crossing-switch relation is unoriented.
SkeinVector sigma_h();

/// The vertical idempotent basis (e1v, e2v, e3v) as Gen-basis vectors.
std::array<SkeinVector, 3> idempotents_v();

/// The horizontal idempotent basis, the 90-degree rotation of the vertical one.
std::array<SkeinVector, 3> idempotents_h();

/// Exact 3x3 matrix over the ground field.
class SkeinMatrix {
public:
    SkeinMatrix();  // zero matrix
    static SkeinMatrix identity();
    static SkeinMatrix diagonal(RatFunc d1, RatFunc d2, RatFunc d3);

    RatFunc& at(int i, int j) { return m_[i][j]; }
    const RatFunc& at(int i, int j) const { return m_[i][j]; }

    SkeinMatrix operator*(const SkeinMatrix& o) const;
    std::array<RatFunc, 3> apply(const std::array<RatFunc, 3>& v) const;
    bool operator==(const SkeinMatrix& o) const;

    /// Adjugate-based inverse; throws division_by_zero on singular input.
    SkeinMatrix inverse() const;

private:
    std::array<std::array<RatFunc, 3>, 3> m_;
};

/// Base change matrix M between the horizontal and vertical idempotent bases,
/// derived entry-by-entry from juxtaposition products: e_ih x e_jv = m_ij e_ih.
const SkeinMatrix& base_change_matrix();

/// The same matrix transcribed from its closed-form entries.
SkeinMatrix base_change_matrix_closed_form();

/// Re-express a vector in another basis through the documented base-change
/// maps (Gen <-> idempotent coordinates, and M between the two idempotent
/// flavors).
SkeinVector to_basis(const SkeinVector& v, Basis target);

}  // namespace kauffman
