#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace colorfan {

/// Exact rational scalar used throughout the core. All geometry, linear
/// algebra and divisor arithmetic is carried out over this type; there are
/// no tolerances anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer lattice vector (coordinates of N^pi in the dropped-label basis).
using LatVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Malformed user input (bad JSON, mismatched ground sets, ...). Exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violation of an internal consistency assertion (balancing failure inside
/// the degree engine, mixed-volume route disagreement, ...). Exit code 3.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; rejects q == 0 and garbage.
std::optional<Rational> parse_rational(const std::string& text);

RatVec to_rational(const LatVec& v);

} // namespace colorfan
