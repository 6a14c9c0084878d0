#include "telinv/apps.hpp"

#include "telinv/errors.hpp"
#include "telinv/gfn.hpp"

#include <cmath>

namespace telinv {

int curl_field_index(int j, int l) {
    const int g = int(gamma_int(l));
    return 2 + (j % 2 == 0 ? g : -g) + j * (l + 2) - l;
}

int curl_axis_index(int j, int l) {
    const int g = int(gamma_int(l));
    return 4 - (j % 2 == 0 ? g : -g) - j * (l + 2);
}

Vec3<double> curl_components(const CurlInput& in) {
    for (double h : in.h)
        if (!(h > 0) || !std::isfinite(h)) throw DomainError("scale factors must be positive and finite");
    for (const auto& row : in.D)
        for (double d : row)
            if (!std::isfinite(d)) throw DomainError("partial derivatives must be finite");

    const double volume = in.h[0] * in.h[1] * in.h[2];
    Vec3<double> out{};
    for (int l = 1; l <= 3; ++l) {
        double s = 0;
        for (int j = 0; j <= 1; ++j) {
            const double sign = (j + l) % 2 == 0 ? 1.0 : -1.0;
            s += sign * in.D[std::size_t(curl_field_index(j, l) - 1)][std::size_t(curl_axis_index(j, l) - 1)];
        }
        out[std::size_t(l - 1)] = in.h[std::size_t(l - 1)] / volume * s;
    }
    return out;
}

}  // namespace telinv
