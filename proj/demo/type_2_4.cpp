// Type (2,4): five elliptic quotients, in symbolic, rational and golden-ratio parameters.

#include <iostream>

#include "gfc/gfc.hpp"

using namespace gfc;

int main() {
    std::cout << "== symbolic lambda1, lambda2 ==\n";
    const auto sym = decompose_prime(2, 4, std::vector<Scalar>{Scalar::symbol("l1"), Scalar::symbol("l2")});
    std::cout << to_text(sym) << "\n";

    std::cout << "== lambda1 = 2, lambda2 = 7 ==\n";
    const auto generic = decompose_prime(2, 4, std::vector<Scalar>{Scalar(2), Scalar(7)});
    std::cout << to_text(generic);
    std::cout << "classes: " << group_by_j(generic).summary << "\n\n";

    std::cout << "== lambda1 = (1-sqrt5)/2, lambda2 = 1/lambda1 ==\n";
    const Scalar l1 = Scalar::quadratic(mpq_class(1, 2), mpq_class(-1, 2), 5);
    const auto special = decompose_prime(2, 4, std::vector<Scalar>{l1, Scalar(1) / l1});
    std::cout << to_text(special);
    std::cout << "classes: " << group_by_j(special).summary << "\n";
    for (const auto& c : special_parameter_conditions(l1).conditions)
        std::cout << "  " << c.name << ": " << (c.polynomial_vanishes ? "holds" : "fails") << "\n";
    return 0;
}
