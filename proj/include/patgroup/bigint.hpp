#ifndef PATGROUP_BIGINT_HPP
#define PATGROUP_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace patgroup
{

/// Unbounded integer used for group orders and avoider counts.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

} // namespace patgroup

#endif // PATGROUP_BIGINT_HPP
