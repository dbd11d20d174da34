// Read a complex from JSON and report whether it is an M-complex.

#include "menelaus/menelaus.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    using namespace menelaus;
    if (argc != 2) {
        std::cerr << "usage: validate_file COMPLEX.json\n";
        return 64;
    }
    std::ifstream in(argv[1]);
    std::stringstream text;
    text << in.rdbuf();
    try {
        auto k = parse_complex(text.str());
        auto r = validate_mcomplex(k);
        if (auto* c = std::get_if<MComplexCert>(&r)) {
            std::cout << "M-complex of genus " << genus(*c) << "\n" << axiomatic_sequent(*c).text() << "\n";
            return 0;
        }
        std::cout << violation_to_json(std::get<Violation>(r)).dump(2) << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
