#include "embmon/ints.hpp"

#include <cassert>
#include <sstream>

namespace embmon {

void primitivize(VecInt &v)
{
    Int g = vecGcd(v);
    if (g <= 1) return;
    for (Int &x : v) x /= g;
}

Int dotII(const VecInt &a, const VecInt &b)
{
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dotIR(const VecInt &a, const VecRat &b)
{
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Rat dotRR(const VecRat &a, const VecRat &b)
{
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecInt addVec(const VecInt &a, const VecInt &b)
{
    assert(a.size() == b.size());
    VecInt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecInt subVec(const VecInt &a, const VecInt &b)
{
    assert(a.size() == b.size());
    VecInt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecInt negVec(const VecInt &a)
{
    VecInt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

VecInt scaleVec(const Int &c, const VecInt &a)
{
    VecInt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool isZeroVec(const VecInt &v)
{
    for (const Int &x : v)
        if (x != 0) return false;
    return true;
}

bool lexLess(const VecInt &a, const VecInt &b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

VecInt clearDenominators(const VecRat &v)
{
    Int m = 1;
    for (const Rat &q : v) m = lcmInt(m, q.get_den());
    VecInt r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (m / v[i].get_den());
    primitivize(r);
    return r;
}

VecRat toRatVec(const VecInt &v)
{
    VecRat r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::string vecToString(const VecInt &v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

std::string vecToString(const VecRat &v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

} // namespace embmon
