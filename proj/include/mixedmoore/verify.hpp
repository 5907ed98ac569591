#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mixedmoore::verify {

struct Check {
    std::string description;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    bool passed() const;
};

// table1 table2 table3 table4 families gplus search-k3 search-k4 cayley lift
// properties
const std::vector<std::string>& suite_names();

// Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, int jobs = 1);

// One line per check, then a summary line.
std::string format_report(const SuiteReport& report);

} // namespace mixedmoore::verify
