#ifndef ROGUE_DISPATCH_HPP
#define ROGUE_DISPATCH_HPP

#include <utility>

#include "rogue/mp_real.hpp"

namespace rogue {

/// Runs f.template operator()<R>() with R = double for 53 bits and R = Real
/// (under a PrecisionScope) otherwise.
template <class F>
decltype(auto) with_precision(int bits, F&& f) {
    if (bits == 53) return std::forward<F>(f).template operator()<double>();
    PrecisionScope scope(bits);
    return std::forward<F>(f).template operator()<Real>();
}

}  // namespace rogue

#endif  // ROGUE_DISPATCH_HPP
