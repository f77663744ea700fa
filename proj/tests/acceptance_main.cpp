#include "sturmia/acceptance.hpp"

#include <iostream>

int main() {
    auto results = sturmia::run_acceptance({}, std::cerr);
    int failed = 0;
    for (const auto& r : results) {
        std::cout << sturmia::format_result(r) << "\n";
        failed += !r.pass;
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
