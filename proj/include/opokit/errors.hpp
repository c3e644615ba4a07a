#pragma once

#include <stdexcept>
#include <string>

namespace opokit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wavelength or temperature outside a material's declared validity range.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Signal and idler FSRs coincide: fully compensated birefringence, no clustering.
class DegenerateFsrError : public Error {
public:
    using Error::Error;
};

/// Signal and idler group indices coincide inside the SPDC crystal.
class DegenerateBirefringenceError : public Error {
public:
    using Error::Error;
};

/// Tuning crystal oriented so it adds to the SPDC birefringence instead of compensating.
class NotCompensatingError : public Error {
public:
    using Error::Error;
};

/// Round-trip power ratio outside (0,1): finesse undefined.
class LossyCavityError : public Error {
public:
    using Error::Error;
};

class UnsortedInputError : public Error {
public:
    using Error::Error;
};

/// Accidental estimate exceeds every histogram bin.
class NegativeBaselineError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class FitDivergedError : public Error {
public:
    using Error::Error;
};

class OutOfDomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace opokit
