#pragma once

// Curl in orthogonal curvilinear coordinates and the scalar triple product,
// both written with the gamma-indexed 3 x 3 determinant.

#include <array>

namespace telinv {

template <class T>
using Vec3 = std::array<T, 3>;

struct CurlInput {
    Vec3<double> h;               // scale factors, all positive
    std::array<Vec3<double>, 3> D;  // D[i-1][j-1] = d(h_i F_i)/du_j
};

// Index of the field component, 2 + (-1)^j Gamma(l) + j(l+2) - l.
int curl_field_index(int j, int l);
// Index of the derivative axis, 4 - (-1)^j Gamma(l) - j(l+2).
int curl_axis_index(int j, int l);

// Coefficients of u_1, u_2, u_3.
Vec3<double> curl_components(const CurlInput& in);

// Signed (a x b) . c.
template <class T>
T scalar_triple(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c) {
    T v{};
    for (int l = 1; l <= 3; ++l)
        for (int j = 0; j <= 1; ++j) {
            const double sign = (j + l) % 2 == 0 ? 1.0 : -1.0;
            v += sign * a[std::size_t(l - 1)] * b[std::size_t(curl_axis_index(j, l) - 1)] *
                 c[std::size_t(curl_field_index(j, l) - 1)];
        }
    return v;
}

}  // namespace telinv
