#include "matcat/acceptance.hpp"

#include <cstdio>
#include <iostream>

int main()
{
    auto results = matcat::run_acceptance();
    int failed = 0;
    for (auto& r : results) {
        std::cout << matcat::format_result(r) << "\n";
        failed += !r.ok;
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
