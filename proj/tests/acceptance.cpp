// Acceptance suite: runs the numbered criteria and prints one verdict line
// per criterion. Exit status is nonzero if any executed criterion fails.

#include <cstring>
#include <iostream>
#include <string>

#include "hfk11/selftest.hpp"

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    int failures = 0, executed = 0;
    for (const auto& check : hfk::acceptance_checks()) {
        if (only != 0 && check.criterion != only) continue;
        ++executed;
        hfk::CheckResult r = hfk::run_check(check);
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << check.criterion << " ("
                  << check.name << ") [" << r.seconds << "s]\n";
        if (!r.pass) {
            std::cout << "     expected: " << r.expected << "\n";
            std::cout << "     actual:   " << r.actual << "\n";
            ++failures;
        }
    }
    if (executed == 0) {
        std::cerr << "no such criterion\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
