// Prints the section-dimension table h^0(nL) of the (6,10) complete
// intersection next to the Riemann-Roch prediction, and cross-checks the
// row-reduction oracle on one explicit pair.

#include <iostream>

#include "ci610/hilbert.hpp"
#include "ci610/poly_text.hpp"

int main() {
    using namespace ci610;
    auto h = ci_hilbert_series(20);
    auto f = parse_wpoly_q("Z0^2 + X0*U0 + Y0^3 + Y1^3 + X0^6");
    auto g = parse_wpoly_q("U0^2 + Y0^5 + 2*Y1^5 + X0^10");
    std::cout << " n  series  RR(n)  oracle\n";
    for (int n = 0; n <= 12; ++n) {
        std::cout.width(2);
        std::cout << n << "  ";
        std::cout.width(6);
        std::cout << h.at(n) << "  ";
        std::cout.width(5);
        std::cout << chi_riemann_roch(n) << "  ";
        std::cout.width(6);
        std::cout << quotient_dim_oracle(f, g, n) << "\n";
    }
    return 0;
}
