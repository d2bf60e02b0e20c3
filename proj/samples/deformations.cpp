// One-parameter deformations of the abelian plane: t times the LZ2 product is
// a deformation, t times e1 e1 = e1 is obstructed at order 2.
#include <iostream>

#include "homnr/deformation.hpp"
#include "homnr/fixtures.hpp"

using namespace homnr;

namespace {

void report(const std::string& name, const FormalDeformation& def) {
    std::cout << name << ": exact deformation " << (is_deformation(def, DefectMode::exact) ? "yes" : "no") << "\n";
    for (const auto& r : obstruction_report(def, DefectMode::exact)) {
        std::cout << "  order " << r.order << ": defect " << (r.defect.is_zero() ? "zero" : "nonzero");
        for (const auto& [t, v] : r.defect.entries()) {
            std::cout << " at (";
            for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << "e" << t[i] + 1;
            std::cout << ")";
        }
        std::cout << "\n";
    }
    if (!is_deformation(def, DefectMode::truncated)) return;
    OrderExtension x = extend_order(def);
    std::cout << "  next order " << (x.next ? "solvable" : "obstructed") << " (rank " << x.rank << ", augmented "
              << x.augmented_rank << ")\n";
}

}  // namespace

int main() {
    HomAlgebra plane = fixture_abelian2();
    Cochain lz2 = fixture_lz2().product;
    Cochain square(2, 2, 2);
    square.set({0, 0}, unit_vector(2, 0));

    report("t LZ2", FormalDeformation::make(plane, {lz2}));
    report("t (e1 e1 = e1)", FormalDeformation::make(plane, {square}));

    // order one: coefficients differing by a coboundary are equivalent
    HomAlgebra base = fixture_lz2();
    Matrix phi(2, 2);
    phi(1, 1) = 1;
    Cochain d1(2, 2, 2);
    Cochain moved = d1 - coboundary(base, linear_cochain(phi));
    auto found = order_one_equivalence(FormalDeformation::make(base, {d1}), FormalDeformation::make(base, {moved}));
    std::cout << "LZ2 with d_1 = 0 and d_1 = -D(phi): " << (found ? "equivalent" : "not equivalent") << "\n";
    return 0;
}
