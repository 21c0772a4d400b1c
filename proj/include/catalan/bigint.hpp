#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace catalan {

using big_int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const big_int& value) { return value.str(); }

} // namespace catalan
