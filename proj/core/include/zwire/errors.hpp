#pragma once

#include <stdexcept>

namespace zwire {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Energy outside the regime an operation supports (e.g. closed channels).
class RegimeError : public Error {
public:
    using Error::Error;
};

// Energy sits exactly on a band bottom, where a wave vector vanishes.
class ThresholdError : public Error {
public:
    using Error::Error;
};

class SingularError : public Error {
public:
    using Error::Error;
};

// Field direction requested where |B| = 0.
class DirectionError : public Error {
public:
    using Error::Error;
};

class AntipodalError : public Error {
public:
    using Error::Error;
};

// Evanescent growth would exceed double-precision headroom.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Lattice and continuum disagree about which channels are open.
class ChannelMismatchError : public Error {
public:
    using Error::Error;
};

class ProfileError : public Error {
public:
    using Error::Error;
};

}  // namespace zwire
