#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cusp_theta/acceptance.hpp"

// acceptance [id...]: runs the given criteria (all when none), one line each
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= cusp_theta::acceptance_count; ++i) ids.push_back(i);
    bool ok = true;
    for (const auto& r : cusp_theta::run_acceptance(ids)) {
        std::cout << cusp_theta::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
