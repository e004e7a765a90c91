#pragma once

#include <stdexcept>
#include <string>

namespace loom {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A relation set whose transitive closure would contain x < x.
class CycleError : public Error {
public:
    using Error::Error;
};

/// interval(a, b) requested with a and b incomparable.
class NotComparable : public Error {
public:
    using Error::Error;
};

/// ideal_closure on a set with no upper bound.
class Unbounded : public Error {
public:
    using Error::Error;
};

/// An operation received an empty set where a nonempty one is required.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// The ideal enumeration exceeded the configured cap.
class SizeLimit : public Error {
public:
    using Error::Error;
};

/// classify_interval on a poset with no comparable (min, max) pair.
class NoComparablePair : public Error {
public:
    using Error::Error;
};

/// An s-arc operation on a graph that has no s-arc.
class NoArcs : public Error {
public:
    using Error::Error;
};

/// A digraph operation referenced an arc that does not exist.
class MissingArc : public Error {
public:
    using Error::Error;
};

/// An operation requiring a connected structure got a disconnected one.
class NotConnected : public Error {
public:
    using Error::Error;
};

/// A digraph operation requiring a level map got a digraph without one.
class MissingLevels : public Error {
public:
    using Error::Error;
};

/// A generator was called with out-of-range parameters.
class BadParams : public Error {
public:
    using Error::Error;
};

/// A finite-field generator was called with a non-prime modulus.
class NonPrimeField : public Error {
public:
    using Error::Error;
};

/// dl_construction on a delta that is not 1-arc-transitive.
class NotOneArcTransitive : public Error {
public:
    using Error::Error;
};

/// digraph_from_poset with levels requested on a non-graded poset.
class NotGraded : public Error {
public:
    using Error::Error;
};

/// A structure file could not be parsed as JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structure file parsed but violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace loom
