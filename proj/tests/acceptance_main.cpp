#include <cstdlib>
#include <iostream>

#include "severi/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    const auto results = severi::selftest::run_acceptance(seed, &std::cout);
    const bool ok = severi::selftest::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "ACCEPTANCE FAILURES PRESENT") << "\n";
    return ok ? 0 : 1;
}
