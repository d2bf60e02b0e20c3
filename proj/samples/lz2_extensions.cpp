// Abelian extensions of LZ2 (e2 e2 = e1) by the trivial line Q, sorted into
// equivalence classes and compared with the second cohomology.
#include <iostream>

#include "homnr/extension.hpp"
#include "homnr/fixtures.hpp"

using namespace homnr;

namespace {

Cochain indicator(std::size_t x, std::size_t y) {
    Cochain c(2, 1, 2);
    c.set({x, y}, Vector{1});
    return c;
}

std::string show(const Matrix& m) {
    std::string s = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(0, j).str();
    return s + "]";
}

}  // namespace

int main() {
    HomAlgebra line = HomAlgebra::make("Q", BasedSpace::standard(1, "f"), Cochain(1, 1, 2), TwistMap::identity(1),
                                       StructureKind::left_leibniz);
    RepresentationData rep = RepresentationData::make(fixture_lz2(), line);

    CohomologyDims h2 = ext_group_dims(rep);
    std::cout << "Z^2 = " << h2.Z << ", B^2 = " << h2.B << ", H^2 = " << h2.H << "\n";

    ExtensionAlgebra trivial = build_extension(rep, Cochain(2, 1, 2));
    const char* names[] = {"0", "theta22", "theta21", "theta21 + theta22"};
    std::vector<ExtensionAlgebra> exts;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            exts.push_back(build_extension(rep, Rational(a) * indicator(1, 0) + Rational(b) * indicator(1, 1)));

    for (std::size_t i = 0; i < exts.size(); ++i) {
        ClassifyReport k = classify(exts[i]);
        AbelianEquivalence eq = equivalent_abelian(exts[i], trivial);
        std::cout << std::boolalpha << names[i] << ": central " << k.central << ", abelian " << k.abelian << ", ";
        if (eq.h)
            std::cout << "equivalent to the trivial extension with h = " << show(*eq.h) << "\n";
        else
            std::cout << "not trivial (rank " << eq.rank << " < " << eq.augmented_rank << ")\n";
    }

    // the engine's perturbation d + [d, H] trivializes theta22 with h(e1) = +1
    PerturbResult p = coboundary_perturb(exts[1], Matrix::from_rows({{1, 0}}, 2));
    std::cout << "perturbing theta22 by h = [1, 0] leaves theta " << (p.extension.theta.is_zero() ? "zero" : "nonzero")
              << "\n";

    std::size_t classes = 0;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < exts.size(); ++i) {
        bool seen = false;
        for (std::size_t r : reps) seen = seen || equivalent_abelian(exts[i], exts[r]).h.has_value();
        if (!seen) reps.push_back(i), ++classes;
    }
    std::cout << classes << " classes among the four cocycles\n";
    return 0;
}
