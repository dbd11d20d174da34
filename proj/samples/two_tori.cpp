// Glue two tori along a shared cell, then derive the resulting sequent two ways:
// as a cut of the two axioms, and by proof search.

#include "menelaus/menelaus.hpp"

#include <iostream>

int main()
{
    using namespace menelaus;
    auto a = corpus::get_cert("torus6_pappus1");
    auto b = corpus::get_cert("torus6_pappus2");

    auto s = sum_to_cut(a, "D1I", b, "D1I");
    std::cout << "sum: chi " << euler_characteristic(s.complex.complex) << ", genus " << genus(s.complex) << "\n";
    std::cout << "sequent: " << s.sum.text() << "\n";
    std::cout << "cut of axioms checks: " << std::boolalpha << check_derivation(s.derivation).ok << "\n";

    auto d = decide(s.sum);
    std::cout << "decide: " << status_name(d.status) << " after " << d.trace.sequents << " sequents\n";

    for (const auto& t : find_cut_triangles(s.complex))
        std::cout << "cut-triangle " << t.edges[0] << "," << t.edges[1] << "," << t.edges[2] << "\n";
}
