#ifndef JUMPLAB_ERRORS_HPP
#define JUMPLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jumplab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("singular matrix: elimination found no pivot") {}
};

class NonPositiveResistance : public Error {
public:
    explicit NonPositiveResistance(const std::string& edge)
        : Error("non-positive resistance on edge '" + edge + "'") {}
};

class NegativeResistance : public Error {
public:
    explicit NegativeResistance(const std::string& edge)
        : Error("negative resistance on edge '" + edge + "'") {}
};

class DisconnectedNetwork : public Error {
public:
    DisconnectedNetwork() : Error("network is not connected") {}
};

class UnknownEdge : public Error {
public:
    explicit UnknownEdge(const std::string& what) : Error("unknown edge: " + what) {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& what) : Error("unknown vertex: " + what) {}
};

class TooLargeForEnumeration : public Error {
public:
    TooLargeForEnumeration(std::size_t edges, std::size_t bound)
        : Error("graph has " + std::to_string(edges) + " edges, enumeration bound is " +
                std::to_string(bound)) {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class BasisMismatch : public Error {
public:
    using Error::Error;
};

class NonCanonicalLabel : public Error {
public:
    explicit NonCanonicalLabel(const std::string& edge)
        : Error("edge '" + edge + "' carries the unit label (all exponents zero)") {}
};

class NonZeroDegree : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("matrix is not symmetric") {}
};

} // namespace jumplab

#endif // JUMPLAB_ERRORS_HPP
