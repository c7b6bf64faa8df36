#pragma once

#include "kingdon/algebra.hpp"

#include <cstdint>
#include <random>

namespace kingdon {

// Deterministic source of small rational coefficients for the sampled
// suites. Raw engine draws only; identical seeds give identical streams on
// every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // numerator in [-4, 4], denominator in {1, 2}
    Scalar small_scalar() {
        auto num = static_cast<int64_t>(next() % 9) - 4;
        auto den = static_cast<int64_t>(next() % 2) + 1;
        return Scalar(num, den);
    }

    Element element(const AlgebraPtr& a) {
        std::vector<Scalar> c(a->dim());
        for (auto& x : c)
            x = small_scalar();
        return a->element(std::move(c));
    }

    Element nonzero_element(const AlgebraPtr& a) {
        for (;;) {
            Element e = element(a);
            if (!e.is_zero())
                return e;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace kingdon
