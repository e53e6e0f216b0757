#pragma once

#include <functional>
#include <string>
#include <vector>

namespace acceptance {

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

Result criterion_1();
Result criterion_2();
Result criterion_3();
Result criterion_4();
Result criterion_5();
Result criterion_6();
Result criterion_7();
Result criterion_8();

/// Criteria 1 to 8 in order.
std::vector<std::function<Result()>> core_criteria();

/// "PASS  1  <title>: <detail> (0.42 s)"
std::string format(const Result& r);

} // namespace acceptance
