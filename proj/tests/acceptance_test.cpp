#include <ringline/acceptance.hpp>

#include <iostream>

// One line per criterion; nonzero exit if any fails.
auto main() -> int
{
    bool ok = true;
    for (const auto & c : ringline::acceptance_criteria()) {
        auto r = ringline::run_criterion(c, {});
        std::cout << r.to_line() << std::endl;
        ok = ok && r.passed;
    }
    std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
    return ok ? 0 : 1;
}
