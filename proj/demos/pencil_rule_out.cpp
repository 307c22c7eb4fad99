// Samples one matrix datum per terminal case of the genus-3 pencil analysis
// and prints the cokernel splitting that rules the case out.

#include <iostream>

#include "ci610/gamma.hpp"

int main() {
    using namespace ci610;
    Rng rng(1);
    for (auto kind : {PencilCase::case1, PencilCase::case211, PencilCase::case212,
                      PencilCase::case221, PencilCase::case2221, PencilCase::case2222}) {
        auto g = sample_gamma_case<Rat>(kind, rng, Rat(0));
        auto v = pencil_case_verdict(g);
        std::cout << "case " << to_string(v.label.kind) << ": Cok(gamma) = "
                  << v.cok_gamma.str() << ", max summand < 10 => ruled out: "
                  << (v.ruled_out ? "yes" : "no") << "\n";
    }
    return 0;
}
