#pragma once

#include <stdexcept>
#include <string>

namespace layerdent {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Engineering-constant set violates the positive-definiteness requirement
// 1 - nu - 2(E/E')nu'^2 > 0.
class StabilityViolation : public Error {
public:
    using Error::Error;
};

// Characteristic equation has equal or complex-conjugate roots in gamma^2
// (exact isotropy included); the two-root kernel formulas divide by
// gamma1 - gamma2, so such materials must take the isotropic path.
class DegenerateRoots : public Error {
public:
    using Error::Error;
};

// Kernel denominator Z vanished relative to its largest term; the material
// pair is ill-conditioned for the closed-form coupling coefficients.
class SingularZ : public Error {
public:
    using Error::Error;
};

class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

class NoBracket : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace layerdent
