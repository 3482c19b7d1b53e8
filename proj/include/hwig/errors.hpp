#ifndef HWIG_ERRORS_HPP
#define HWIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hwig {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis or shape mismatch between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Parameter outside its admissible range (tau < 0, zeta outside [0,1], ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// (U, V) kernels that do not form a valid Bogoliubov pair.
struct InvalidPairError : Error {
    explicit InvalidPairError(const std::string& msg) : Error(msg) {}
};

// Heralding success probability vanishes; the conditioned state does not exist.
struct HeraldImpossibleError : Error {
    explicit HeraldImpossibleError(const std::string& msg) : Error(msg) {}
};

// Requested operation outside the supported range (e.g. higher photon numbers).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// Polynomial support sticking out of the requested reduction subspace.
struct ReductionError : Error {
    explicit ReductionError(const std::string& msg) : Error(msg) {}
};

// Numerical verification failed (quadrature instability, normalization drift).
struct NumericalError : Error {
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Malformed configuration file or command line.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace hwig

#endif
