#pragma once

#include <cstddef>
#include <vector>

#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly::test {

using Columns = std::vector<std::vector<Entry>>;

inline MPoly X(std::size_t n, std::size_t i) { return MPoly::x(n, i); }
inline MPoly Q(std::size_t n = 0) { return MPoly::q(n); }
inline MPoly T(std::size_t n = 0) { return MPoly::t(n); }
inline MPoly C(std::size_t n, long v) { return MPoly::constant(n, Integer(v)); }
inline MPoly one_minus_qt(std::uint32_t a, std::uint32_t b, std::size_t n = 0) { return QtFactor(a, b).to_poly(n); }

}  // namespace macpoly::test
