// Classical Fermat curves F4, F6, F8: explicit subgroup families and cyclic quotient scans.

#include <iostream>
#include <map>

#include "gfc/gfc.hpp"

using namespace gfc;

int main() {
    for (int k : {4, 6, 8}) {
        const FermatFamily fam = fermat_family(k);
        std::cout << "F" << k << " (genus " << total_genus(k, 2) << ")\n";
        for (const auto& m : fam.members)
            std::cout << "  " << m.label << " = " << m.subgroup.label() << "  " << m.signature.to_string() << "\n";
        std::cout << "  certificate: " << fam.certificate.message << "\n";

        std::map<std::string, int> census;
        for (const auto& e : scan_cyclic_quotients(k, 2)) ++census[e.signature.to_string()];
        std::cout << "  cyclic quotients:";
        for (const auto& [sig, count] : census) std::cout << " " << sig << " x" << count;
        std::cout << "\n\n";
    }

    const auto cand = conjectural_enumeration(4, 2, BranchSet::standard({}));
    std::cout << "F4 candidate factors (" << cand.mode << "):\n";
    for (const auto& c : cand.candidates) std::cout << "  " << c.equation << "  genus " << c.genus << "\n";
    return 0;
}
