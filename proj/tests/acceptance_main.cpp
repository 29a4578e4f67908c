// Acceptance binary: one pass/fail line per criterion; exit 0 iff all pass.

#include "ravenlab/selftest.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::string only;
    if (argc > 1) only = argv[1];
    bool ok = ravenlab::run_acceptance(std::cout, only);
    std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present")
              << "\n";
    return ok ? 0 : 1;
}
