#ifndef GLP_NUMFMT_HPP
#define GLP_NUMFMT_HPP

#include <cstdio>
#include <string>

namespace glp {

/// "%.17g" rendering, which round-trips every double. Negative zero prints as 0.
inline std::string format_g17(double v)
{
    if (v == 0.0)
        v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace glp

#endif // GLP_NUMFMT_HPP
