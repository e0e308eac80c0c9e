#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace klr {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace klr
