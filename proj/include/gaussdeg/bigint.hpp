#pragma once

#include <gmpxx.h>

#include <string>

namespace gaussdeg {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace gaussdeg
