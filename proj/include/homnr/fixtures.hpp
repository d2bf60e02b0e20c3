#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "homnr/algebra.hpp"

namespace homnr {

namespace detail {

struct StructureConstant {
    std::size_t i, j, k;  // 1-based: e_i e_j += c e_k
    long c;
};

inline Cochain product_from(std::size_t n, std::initializer_list<StructureConstant> cs) {
    Cochain d(n, n, 2);
    for (const auto& x : cs) d.add_component({x.i - 1, x.j - 1}, x.k - 1, Rational(x.c));
    return d;
}

inline TwistMap diagonal_twist(std::initializer_list<long> entries) {
    Vector d;
    for (long x : entries) d.push_back(Rational(x));
    return TwistMap(Matrix::diagonal(d));
}

}  // namespace detail

// dim 2, zero product, identity twist
inline HomAlgebra fixture_abelian2() {
    return HomAlgebra::make("FIX-ABELIAN2", BasedSpace::standard(2), Cochain(2, 2, 2), TwistMap::identity(2),
                            StructureKind::left_leibniz);
}

// dim 2, e2 e2 = e1
inline HomAlgebra fixture_lz2() {
    return HomAlgebra::make("FIX-LZ2", BasedSpace::standard(2), detail::product_from(2, {{2, 2, 1, 1}}),
                            TwistMap::identity(2), StructureKind::left_leibniz);
}

// dim 1, e1 e1 = e1; declared left-leibniz, which it is not
inline HomAlgebra fixture_nonleib1() {
    return HomAlgebra::make("FIX-NONLEIB1", BasedSpace::standard(1), detail::product_from(1, {{1, 1, 1, 1}}),
                            TwistMap::identity(1), StructureKind::left_leibniz);
}

// Heisenberg: [e1,e2] = e3
inline HomAlgebra fixture_heis() {
    return HomAlgebra::make("FIX-HEIS", BasedSpace::standard(3), detail::product_from(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}),
                            TwistMap::identity(3), StructureKind::hom_lie);
}

inline HomAlgebra fixture_heis_beta() {
    return HomAlgebra::make("FIX-HEIS-BETA", BasedSpace::standard(3),
                            detail::product_from(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}), detail::diagonal_twist({2, 3, 6}),
                            StructureKind::hom_lie);
}

inline HomAlgebra fixture_diag_beta() {
    return HomAlgebra::make("FIX-DIAG-BETA", BasedSpace::standard(2), Cochain(2, 2, 2), detail::diagonal_twist({1, 2}),
                            StructureKind::left_leibniz);
}

// sl2 in the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
inline HomAlgebra sl2() {
    BasedSpace s;
    s.dim = 3;
    s.labels = {"e", "f", "h"};
    Cochain d = detail::product_from(3, {{1, 2, 3, 1},
                                         {2, 1, 3, -1},
                                         {3, 1, 1, 2},
                                         {1, 3, 1, -2},
                                         {3, 2, 2, -2},
                                         {2, 3, 2, 2}});
    return HomAlgebra::make("sl2", s, d, TwistMap::identity(3), StructureKind::hom_lie);
}

inline std::vector<HomAlgebra> all_fixtures() {
    return {fixture_abelian2(), fixture_lz2(), fixture_nonleib1(), fixture_heis(), fixture_heis_beta(), fixture_diag_beta()};
}

// Fixtures expected to fail verification of their declared kind.
inline bool is_negative_fixture(const std::string& name) { return name == "FIX-NONLEIB1"; }

}  // namespace homnr
