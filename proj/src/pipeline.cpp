#include "kauffman/pipeline.hpp"

namespace kauffman {

namespace {

// Twist eigenvalues (s, -1/s, 1/alpha) raised to the b-th power.
std::array<RatFunc, 3> twist_powers(long b) {
    return {RatFunc::s(1).pow(b), (-RatFunc::s(-1)).pow(b), RatFunc::alpha(-b)};
}

// Intermediate vectors pick up large spurious common factors; reducing after
// every matrix application keeps the pipeline polynomial-sized.
void reduce_entries(std::array<RatFunc, 3>& v) {
    for (auto& e : v) e = e.reduce();
}

}  // namespace

SkeinMatrix matrix_D(long d) {
    auto p = twist_powers(d);
    return SkeinMatrix::diagonal(p[0], p[1], p[2]);
}

SkeinMatrix matrix_B(long b) {
    const SkeinMatrix& m = base_change_matrix();
    SkeinMatrix r = m * matrix_D(b) * m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = r.at(i, j).reduce();
    return r;
}

SkeinMatrix matrix_B1(long b) {
    const SkeinMatrix& m = base_change_matrix();
    const auto p = twist_powers(b);
    SkeinMatrix r;
    for (int i = 0; i < 3; ++i) {
        RatFunc e(0);
        for (int j = 0; j < 3; ++j) e += m.at(i, j) * p[j];
        r.at(i, i) = e.reduce();
    }
    return r;
}

std::array<RatFunc, 3> closure_row() {
    return {RatFunc(0), RatFunc(0), delta()};
}

KauffmanResult kauffman_2bridge(const FractionNotation& f, bool reduce) {
    FractionNotation::from_entries(f.entries);  // revalidate

    std::array<RatFunc, 3> v{RatFunc(1), RatFunc(1), RatFunc(1)};
    v = matrix_B1(f.entries[0]).apply(v);
    reduce_entries(v);
    for (std::size_t i = 1; i + 1 < f.entries.size(); i += 2) {
        v = matrix_D(f.entries[i]).apply(v);
        v = matrix_B(f.entries[i + 1]).apply(v);
        reduce_entries(v);
    }
    const auto c = closure_row();
    RatFunc value = c[0] * v[0] + c[1] * v[1] + c[2] * v[2];

    bool fully = false;
    if (reduce) value = value.reduce(&fully);
    return KauffmanResult{std::move(value), f, fully};
}

}  // namespace kauffman
