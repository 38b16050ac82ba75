#include "aecc/sphere.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace aecc {

namespace {

constexpr double kPi = std::numbers::pi;

SpherePoint make_point(double phi, double theta) {
    SpherePoint p;
    p.phi = phi;
    p.theta = theta;
    const double sp = std::sin(phi);
    p.x = sp * std::cos(theta);
    p.y = sp * std::sin(theta);
    p.z = std::cos(phi);
    return p;
}

} // namespace

std::size_t OmegaFamily::total_points() const {
    std::size_t c = 0;
    for (const auto& ring : rings) c += ring.size();
    return c;
}

std::vector<SpherePoint> OmegaFamily::flattened() const {
    std::vector<SpherePoint> out;
    out.reserve(total_points());
    for (const auto& ring : rings) out.insert(out.end(), ring.begin(), ring.end());
    return out;
}

OmegaFamily build_omega(std::size_t t) {
    if (t < 4) throw DomainError("build_omega: ring parameter t must be at least 4");

    OmegaFamily fam;
    fam.t = t;
    fam.rings.resize(t + 1);

    fam.rings[0].push_back(make_point(0.0, 0.0)); // exactly (0, 0, 1)

    // Angles come straight from the closed forms; nothing is accumulated.
    for (std::size_t i = 1; i < t; ++i) {
        const double phi = kPi * static_cast<double>(i) / (2.0 * static_cast<double>(t));
        fam.rings[i].reserve(4 * i);
        for (std::size_t j = 0; j < 4 * i; ++j) {
            const double theta = kPi * static_cast<double>(j) / (2.0 * static_cast<double>(i));
            fam.rings[i].push_back(make_point(phi, theta));
        }
    }

    // Equator ring: 2t points over half the circle (antipodes excluded).
    fam.rings[t].reserve(2 * t);
    for (std::size_t j = 0; j < 2 * t; ++j) {
        const double theta = kPi * static_cast<double>(j) / (2.0 * static_cast<double>(t));
        SpherePoint p;
        p.phi = kPi / 2.0;
        p.theta = theta;
        p.x = std::cos(theta);
        p.y = std::sin(theta);
        p.z = 0.0;
        fam.rings[t].push_back(p);
    }
    return fam;
}

namespace {

AnalogCode code_from_points(const std::vector<SpherePoint>& pts, std::size_t n,
                            std::string label) {
    Mat h(3, n);
    for (std::size_t j = 0; j < n; ++j) {
        h.at(0, j) = pts[j].x;
        h.at(1, j) = pts[j].y;
        h.at(2, j) = pts[j].z;
    }
    return AnalogCode::from_parity_check(std::move(h), std::move(label));
}

} // namespace

AnalogCode construct_code(std::size_t t) {
    const auto pts = build_omega(t).flattened();
    return code_from_points(pts, pts.size(), "sphere-t" + std::to_string(t));
}

std::size_t ring_parameter_for_length(std::size_t n) {
    if (n <= 3) throw DomainError("construction needs n > 3");
    const double half = static_cast<double>(n - 1) / 2.0;
    const auto t = static_cast<std::size_t>(std::ceil(std::sqrt(half)));
    if (t < 4)
        throw DomainError("construction needs ring parameter t > 3; length " +
                          std::to_string(n) + " gives t = " + std::to_string(t) +
                          " (smallest supported length is 20)");
    return t;
}

AnalogCode construct_code_for_length(std::size_t n) {
    const std::size_t t = ring_parameter_for_length(n);
    const auto pts = build_omega(t).flattened();
    if (n == pts.size()) return code_from_points(pts, n, "sphere-t" + std::to_string(t));
    return code_from_points(pts, n,
                            "sphere-n" + std::to_string(n) + "-t" + std::to_string(t));
}

double gamma2_bound_for_length(std::size_t n) {
    const auto t = static_cast<double>(ring_parameter_for_length(n));
    return 2.0 * static_cast<double>(n) / std::sin(kPi / (2.0 * t));
}

double delta_bound_for_length(std::size_t n) {
    const auto t = static_cast<double>(ring_parameter_for_length(n));
    return (1.0 / std::tan(kPi / (4.0 * t)) + 1.0) * static_cast<double>(n);
}

double gamma2_bound_formula(double n) {
    if (!(n > 3.0)) throw DomainError("gamma2_bound_formula: need n > 3");
    return 2.0 * n / std::sin(kPi / std::sqrt(2.0 * (n - 1.0)));
}

} // namespace aecc
