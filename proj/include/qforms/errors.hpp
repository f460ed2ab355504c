#pragma once

#include <stdexcept>
#include <string>

namespace qf {

struct grid_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_invertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_system : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct nonconstant_ratio : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_determinant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_taylor_matrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_in_coset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct near_pole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pole_on_contour : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct nonconvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct mean_value_nonzero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct route_unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct slow_decay : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct branch_ambiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct version_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct checksum_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qf
