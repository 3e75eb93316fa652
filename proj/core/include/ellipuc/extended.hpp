#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ellipuc {

// 50 significant decimal digits. Used where double precision cannot resolve
// an ill-conditioned route (moments -> reflection parameters at high degree).
using Extended = boost::multiprecision::cpp_bin_float_50;

}  // namespace ellipuc
