// Check Desargues' configuration from the catalog, then move one point off its line.

#include "menelaus/menelaus.hpp"

#include <iostream>

int main()
{
    using namespace menelaus;
    auto f = corpus::get("des3_only_if");
    auto s = *f.sequent;
    auto v = *f.interp;
    auto i = *f.conclusion_index;

    std::cout << std::boolalpha << s.text() << "\n";
    auto e = check_entailment_instance(v, s, i);
    std::cout << "premises " << e.premises_satisfied << ", conclusion " << e.conclusion_satisfied << "\n";

    v["R"][1] += 1;
    e = check_entailment_instance(v, s, i);
    std::cout << "after moving R: premises " << e.premises_satisfied << ", conclusion " << e.conclusion_satisfied << "\n";
}
