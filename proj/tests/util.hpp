#pragma once

#include <vector>

#include "doctest.h"
#include "isogate/error.hpp"
#include "oracle.hpp"

namespace testutil {

/// Kind of the isogate::Error thrown by fn; fails the test when nothing is thrown.
template <class F>
isogate::ErrorKind kind_of(F&& fn) {
    try {
        fn();
    } catch (const isogate::Error& e) {
        return e.kind();
    }
    FAIL("expected an isogate::Error");
    return isogate::ErrorKind::InvalidArgument;
}

inline std::vector<int> odd_primes(int lo, int hi) {
    std::vector<int> out;
    for (int p = lo; p <= hi; ++p)
        if (p % 2 == 1 && oracle::is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace testutil
