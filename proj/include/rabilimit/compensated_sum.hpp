#pragma once

#include <cmath>

namespace rabilimit {

// Neumaier's variant of Kahan summation: the correction also catches the
// case where the incoming term is larger than the running sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace rabilimit
