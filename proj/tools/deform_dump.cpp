// Scratch inspection tool: prints the miniversal deformation data for a
// canonical codifferential so expected values can be frozen into tests.
#include <iostream>

#include "linfty/canonical.hpp"
#include "linfty/deformation.hpp"
#include "linfty/io.hpp"

using namespace linfty;

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: deform_dump <label> <n_max> <K_max>\n";
        return 1;
    }
    auto label = CanonicalLabel::parse(argv[1]);
    int n_max = std::stoi(argv[2]);
    int k_max = std::stoi(argv[3]);
    auto d = canonical_codifferential(label);
    DeformationEngine<Rational> engine(d, n_max, k_max,
                                       [&](int n) { return preferred_representatives(label, n); });
    std::cout << "classes:\n";
    for (size_t i = 0; i < engine.classes().size(); ++i) {
        std::cout << "  " << engine.registry().at(engine.parameter_of_class(i)).name << " <- "
                  << print_cochain(engine.classes()[i]) << "\n";
    }
    if (argc > 4) { // stepwise tracing mode
        auto st = engine.infinitesimal();
        for (int i = 0; i < 8; ++i) {
            try {
                auto r = engine.step(st);
                std::cout << "step " << i + 1 << ": order " << r.state.order
                          << (r.new_relations ? " +rel" : "") << (r.new_corrections ? " +corr" : "")
                          << (r.had_noncocycle ? " (residues seen)" : "") << "\n";
                for (const auto& [idx, poly] : engine.presented_relations(r.state))
                    std::cout << "    " << poly.str(engine.registry()) << " = 0\n";
                if (!r.changed()) break;
                st = std::move(r.state);
            } catch (const std::exception& e) {
                std::cout << "step " << i + 1 << " FAILED: " << e.what() << "\n";
                std::cout << "  relations at failure:\n";
                for (const auto& [idx, poly] : engine.presented_relations(st))
                    std::cout << "    " << poly.str(engine.registry()) << " = 0\n";
                return 2;
            }
        }
        return 0;
    }
    auto result = engine.run();
    std::cout << "status: " << to_string(result.status) << " at order " << result.order << "\n";
    std::cout << "relations:\n";
    for (const auto& [idx, poly] : result.relations)
        std::cout << "  [" << print_cochain(engine.classes()[static_cast<size_t>(idx)])
                  << "]  " << poly.str(engine.registry()) << " = 0\n";
    std::cout << "boundary relations (classes above the degree cap):\n";
    for (const auto& [cls, poly] : result.boundary_relations)
        std::cout << "  [" << print_cochain(cls) << "]  " << poly.str(engine.registry())
                  << " = 0\n";
    std::cout << "deformation minus base-and-infinitesimal terms:\n";
    auto inf = engine.infinitesimal();
    for (const auto& [b, p] : result.deformation.terms()) {
        SuperPolynomial<Rational> delta = p;
        auto it = inf.deformation.terms().find(b);
        if (it != inf.deformation.terms().end()) delta -= it->second;
        if (!delta.is_zero())
            std::cout << "  " << b.str() << " : " << delta.str(engine.registry()) << "\n";
    }
    auto residual = engine.maurer_cartan_residual(
        DeformationState<Rational>{result.order, result.deformation, {}});
    return 0;
}
