#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace embmon {

using Int = mpz_class;
using Rat = mpq_class;
using VecInt = std::vector<Int>;
using VecRat = std::vector<Rat>;

inline Int gcdInt(const Int &a, const Int &b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcmInt(const Int &a, const Int &b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient of truncated division (rounds toward zero).
inline Int tdivQ(const Int &a, const Int &b)
{
    Int r;
    mpz_tdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient of floor division (rounds toward -infinity).
inline Int fdivQ(const Int &a, const Int &b)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient of ceiling division (rounds toward +infinity).
inline Int cdivQ(const Int &a, const Int &b)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// a mod b reduced into [0, b) for b > 0.
inline Int modReduce(const Int &a, const Int &b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int floorRat(const Rat &q)
{
    return fdivQ(q.get_num(), q.get_den());
}

inline Int ceilRat(const Rat &q)
{
    return cdivQ(q.get_num(), q.get_den());
}

inline Int vecGcd(const VecInt &v)
{
    Int g = 0;
    for (const Int &x : v) g = gcdInt(g, x);
    return g;
}

// Divides out the gcd of the entries; the zero vector is left unchanged.
void primitivize(VecInt &v);

Int dotII(const VecInt &a, const VecInt &b);
Rat dotIR(const VecInt &a, const VecRat &b);
Rat dotRR(const VecRat &a, const VecRat &b);

VecInt addVec(const VecInt &a, const VecInt &b);
VecInt subVec(const VecInt &a, const VecInt &b);
VecInt negVec(const VecInt &a);
VecInt scaleVec(const Int &c, const VecInt &a);

bool isZeroVec(const VecInt &v);
bool lexLess(const VecInt &a, const VecInt &b);

// Smallest integer vector on the ray through a rational vector, empty input stays empty.
VecInt clearDenominators(const VecRat &v);

VecRat toRatVec(const VecInt &v);

std::string vecToString(const VecInt &v);
std::string vecToString(const VecRat &v);

} // namespace embmon
