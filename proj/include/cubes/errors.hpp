#pragma once

#include <stdexcept>
#include <string>

namespace cubes {

// Zero where a nonzero integer is required (factor, L(N), R(0,n), ...).
struct ZeroInput : std::domain_error {
    explicit ZeroInput(const std::string& what) : std::domain_error(what) {}
};

// Product-sum instance with N = 0: infinite solution families, rejected hard.
struct ZeroProduct : std::domain_error {
    explicit ZeroProduct(const std::string& what) : std::domain_error(what) {}
};

// symmetric_profile called on (x,y,z) that does not solve x^3+y^3+z^3 = n.
struct NotASolution : std::domain_error {
    explicit NotASolution(const std::string& what) : std::domain_error(what) {}
};

struct BoundTooLarge : std::domain_error {
    explicit BoundTooLarge(const std::string& what) : std::domain_error(what) {}
};

struct LimitTooLarge : std::domain_error {
    explicit LimitTooLarge(const std::string& what) : std::domain_error(what) {}
};

// Enumeration requested for n = t^3, which has unboundedly many representations.
struct InfiniteFamilyError : std::domain_error {
    explicit InfiniteFamilyError(const std::string& what) : std::domain_error(what) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An interval comparison stayed undecidable after escalating to the precision cap.
// Raised instead of ever returning a possibly-wrong side.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubes
