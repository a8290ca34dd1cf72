#pragma once

#include <vector>

#include "commalg/constructions.hpp"

namespace grid {

inline std::vector<commalg::ConstructionParams> bkml_upto(long max_n, long min_n = 1) {
    std::vector<commalg::ConstructionParams> out;
    for (long n = min_n; n <= max_n; ++n)
        for (long m = 1; m <= n; ++m)
            for (long l = 1; l <= n; ++l)
                for (long k = 1; k <= n; ++k)
                    if (commalg::ConstructionParams{n, m, l, k}.is_valid()) out.push_back({n, m, l, k});
    return out;
}

inline std::vector<commalg::BkmParams> bkm_upto(long max_n, long min_n = 1) {
    std::vector<commalg::BkmParams> out;
    for (long n = min_n; n <= max_n; ++n)
        for (long m = 1; m <= n; ++m)
            for (long k = 1; k <= n; ++k)
                if (commalg::BkmParams{n, m, k}.is_valid()) out.push_back({n, m, k});
    return out;
}

}  // namespace grid
