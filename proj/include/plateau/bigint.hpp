#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace plateau {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

BigInt big_pow(long long base, long long exp);
BigInt binomial(long long n, long long k);
std::string to_string(const BigInt& v);

}  // namespace plateau
