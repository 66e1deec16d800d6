#include "kauffman/tangle.hpp"

namespace kauffman {

SkeinVector SkeinVector::operator+(const SkeinVector& o) const {
    if (basis_ != o.basis_) throw basis_mismatch();
    return {basis_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]}};
}

SkeinVector SkeinVector::operator-(const SkeinVector& o) const {
    if (basis_ != o.basis_) throw basis_mismatch();
    return {basis_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]}};
}

SkeinVector SkeinVector::operator*(const RatFunc& k) const {
    return {basis_, {c_[0] * k, c_[1] * k, c_[2] * k}};
}

bool SkeinVector::operator==(const SkeinVector& o) const {
    if (basis_ != o.basis_) throw basis_mismatch();
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

bool SkeinVector::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero();
}

namespace {

// Concatenation products of the three generators, reduced by the skein
// relations. Indexed by [i][j] with coordinates (Id, CupCap, Sigma).
const std::array<std::array<SkeinVector, 3>, 3>& dot_table() {
    static const auto table = [] {
        const RatFunc z = s_minus_sinv();
        const RatFunc ainv = RatFunc::alpha(-1);
        auto gen = [](Gen g) { return SkeinVector::generator(g); };
        std::array<std::array<SkeinVector, 3>, 3> t;
        const SkeinVector id = gen(Gen::Id);
        const SkeinVector cup = gen(Gen::CupCap);
        const SkeinVector sig = gen(Gen::Sigma);
        t[0][0] = id;
        t[0][1] = cup;
        t[0][2] = sig;
        t[1][0] = cup;
        t[1][1] = cup * delta();
        t[1][2] = cup * ainv;
        t[2][0] = sig;
        t[2][1] = cup * ainv;
        t[2][2] = id + sig * z - cup * (z * ainv);
        return t;
    }();
    return table;
}

}  // namespace

SkeinVector dot(const SkeinVector& u, const SkeinVector& v) {
    if (u.basis() != Basis::Gen || v.basis() != Basis::Gen) throw basis_mismatch();
    const auto& t = dot_table();
    SkeinVector acc;
    for (int i = 0; i < 3; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (v[j].is_zero()) continue;
            acc = acc + t[i][j] * (u[i] * v[j]);
        }
    }
    return acc;
}

SkeinVector rotate(const SkeinVector& v) {
    if (v.basis() != Basis::Gen) throw basis_mismatch();
    const RatFunc z = s_minus_sinv();
    // Id <-> CupCap, Sigma -> Sigma - z Id + z CupCap.
    return {Basis::Gen,
            {v[1] - v[2] * z, v[0] + v[2] * z, v[2]}};
}

SkeinVector cross(const SkeinVector& u, const SkeinVector& v) {
    return rotate(dot(rotate(u), rotate(v)));
}

SkeinVector sigma_inverse() {
    const RatFunc z = s_minus_sinv();
    return {Basis::Gen, {-z, z, RatFunc(1)}};
}

SkeinVector sigma_h() { return sigma_inverse(); }

std::array<SkeinVector, 3> idempotents_v() {
    const RatFunc k = (RatFunc::s(1) + RatFunc::s(-1)).inv();
    const RatFunc dinv = delta().inv();
    const RatFunc ainv = RatFunc::alpha(-1);
    const SkeinVector e1{Basis::Gen,
                         {k * RatFunc::s(-1), -k * dinv * (RatFunc::s(-1) + ainv), k}};
    const SkeinVector e2{Basis::Gen,
                         {k * RatFunc::s(1), k * dinv * (ainv - RatFunc::s(1)), -k}};
    const SkeinVector e3{Basis::Gen, {RatFunc(0), dinv, RatFunc(0)}};
    return {e1, e2, e3};
}

std::array<SkeinVector, 3> idempotents_h() {
    const auto ev = idempotents_v();
    return {rotate(ev[0]), rotate(ev[1]), rotate(ev[2])};
}

SkeinMatrix::SkeinMatrix() {
    for (auto& row : m_)
        for (auto& e : row) e = RatFunc(0);
}

SkeinMatrix SkeinMatrix::identity() {
    SkeinMatrix r;
    for (int i = 0; i < 3; ++i) r.m_[i][i] = RatFunc(1);
    return r;
}

SkeinMatrix SkeinMatrix::diagonal(RatFunc d1, RatFunc d2, RatFunc d3) {
    SkeinMatrix r;
    r.m_[0][0] = std::move(d1);
    r.m_[1][1] = std::move(d2);
    r.m_[2][2] = std::move(d3);
    return r;
}

SkeinMatrix SkeinMatrix::operator*(const SkeinMatrix& o) const {
    SkeinMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    return r;
}

std::array<RatFunc, 3> SkeinMatrix::apply(const std::array<RatFunc, 3>& v) const {
    std::array<RatFunc, 3> r{RatFunc(0), RatFunc(0), RatFunc(0)};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r[i] += m_[i][k] * v[k];
    return r;
}

bool SkeinMatrix::operator==(const SkeinMatrix& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(m_[i][j] == o.m_[i][j])) return false;
    return true;
}

SkeinMatrix SkeinMatrix::inverse() const {
    auto cof = [&](int i, int j) {
        const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0];
    };
    RatFunc det(0);
    for (int k = 0; k < 3; ++k) det += m_[0][k] * cof(0, k);
    const RatFunc dinv = det.inv();
    SkeinMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m_[i][j] = cof(j, i) * dinv;
    return r;
}

const SkeinMatrix& base_change_matrix() {
    static const SkeinMatrix m = [] {
        const auto ev = idempotents_v();
        const auto eh = idempotents_h();
        SkeinMatrix r;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const SkeinVector w = cross(eh[i], ev[j]);
                // w must be a scalar multiple of e_ih; read the scalar off a
                // nonzero coordinate and check proportionality on the rest.
                int k = 0;
                while (eh[i][k].is_zero()) ++k;
                const RatFunc scalar = w[k] / eh[i][k];
                if (!(w == eh[i] * scalar))
                    throw std::logic_error("e_ih x e_jv is not proportional to e_ih");
                r.at(i, j) = scalar.reduce();
            }
        }
        return r;
    }();
    return m;
}

SkeinMatrix base_change_matrix_closed_form() {
    const RatFunc k = (RatFunc::s(1) + RatFunc::s(-1)).inv();
    const RatFunc d = delta();
    const RatFunc dinv = d.inv();
    const RatFunc a = RatFunc::alpha(1);
    const RatFunc ainv = RatFunc::alpha(-1);
    const RatFunc s = RatFunc::s(1);
    const RatFunc sinv = RatFunc::s(-1);
    SkeinMatrix m;
    m.at(0, 0) = k * (sinv - dinv * sinv - dinv * ainv);
    m.at(0, 1) = k * (-sinv - dinv * s + dinv * ainv);
    m.at(0, 2) = dinv;
    m.at(1, 0) = k * (-s - dinv * sinv - dinv * ainv);
    m.at(1, 1) = k * (s - dinv * s + dinv * ainv);
    m.at(1, 2) = dinv;
    m.at(2, 0) = k * (sinv * d + a - dinv * sinv - dinv * ainv);
    m.at(2, 1) = k * (s * d - a - dinv * s + dinv * ainv);
    m.at(2, 2) = dinv;
    return m;
}

SkeinVector to_basis(const SkeinVector& v, Basis target) {
    if (v.basis() == target) return v;

    // Columns of E are the idempotents in Gen coordinates.
    static const auto gen_from_idemp = [](const std::array<SkeinVector, 3>& e) {
        SkeinMatrix m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = e[j][i];
        return m;
    };
    static const SkeinMatrix ev_to_gen = gen_from_idemp(idempotents_v());
    static const SkeinMatrix eh_to_gen = gen_from_idemp(idempotents_h());
    static const SkeinMatrix gen_to_ev = ev_to_gen.inverse();
    static const SkeinMatrix gen_to_eh = eh_to_gen.inverse();

    auto as_gen = [&](const SkeinVector& u) {
        switch (u.basis()) {
            case Basis::Gen: return u.coords();
            case Basis::IdempV: return ev_to_gen.apply(u.coords());
            case Basis::IdempH: return eh_to_gen.apply(u.coords());
        }
        throw std::logic_error("unreachable");
    };
    const std::array<RatFunc, 3> g = as_gen(v);
    switch (target) {
        case Basis::Gen: return {Basis::Gen, g};
        case Basis::IdempV: return {Basis::IdempV, gen_to_ev.apply(g)};
        case Basis::IdempH: return {Basis::IdempH, gen_to_eh.apply(g)};
    }
    throw std::logic_error("unreachable");
}

}  // namespace kauffman
