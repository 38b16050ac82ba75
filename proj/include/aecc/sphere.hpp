#pragma once

#include <cstddef>
#include <vector>

#include "aecc/code.hpp"

// Spherical parity-check construction: 2t^2+1 unit vectors arranged on
// latitude rings of the unit sphere octant-by-octant, giving [n, n-3] codes
// whose pairwise column coherence stays below cos(pi/2t).

namespace aecc {

struct SpherePoint {
    double phi = 0.0;   // polar angle in [0, pi/2]
    double theta = 0.0; // azimuth in [0, 2pi)
    double x = 0.0, y = 0.0, z = 0.0;
};

struct OmegaFamily {
    std::size_t t = 0;
    // rings[i], i = 0..t: ring 0 is the pole; ring i < t has 4i points at
    // phi = pi*i/(2t); ring t has 2t points on the equator.
    std::vector<std::vector<SpherePoint>> rings;

    std::size_t total_points() const; // 2t^2 + 1
    std::vector<SpherePoint> flattened() const; // ring-major, azimuth ascending
};

// Throws DomainError for t < 4.
OmegaFamily build_omega(std::size_t t);

// [2t^2+1, 2t^2-2] code whose parity-check columns are the family points in
// ring-major order; label "sphere-t<t>".
AnalogCode construct_code(std::size_t t);

// Smallest ring parameter covering length n: t = ceil(sqrt((n-1)/2)).
// Throws DomainError when the resulting t would be below 4 (n < 20).
std::size_t ring_parameter_for_length(std::size_t n);

// Length-n code from the first n family points in ring-major order; label
// "sphere-n<n>-t<t>".
AnalogCode construct_code_for_length(std::size_t n);

// Gamma_2 bound 2n / sin(pi / (2 ceil(sqrt((n-1)/2)))) for the length-n code.
double gamma2_bound_for_length(std::size_t n);

// Decoder threshold (cot(pi / (4 ceil(sqrt((n-1)/2)))) + 1) n at delta = 1.
double delta_bound_for_length(std::size_t n);

// Exact-fit form 2n / sin(pi / sqrt(2(n-1))) of the same bound, treating the
// ring parameter as continuous; its ratio to n*sqrt(n) decreases toward
// 2*sqrt(2)/pi.
double gamma2_bound_formula(double n);

} // namespace aecc
