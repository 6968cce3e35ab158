#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// An explicit coefficient list was asked for an index it does not hold.
class IndexBeyondExplicitData : public Error {
public:
    IndexBeyondExplicitData(std::int64_t index, std::size_t length)
        : Error("coefficient index " + std::to_string(index) +
                " is beyond explicit data of length " + std::to_string(length)),
          index_(index) {}

    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

/// A trajectory value that was never computed (past a singularity or the horizon).
class ValueUnavailable : public Error {
public:
    explicit ValueUnavailable(std::int64_t index)
        : Error("value at index " + std::to_string(index) + " is unavailable"), index_(index) {}

    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

class ZeroProduct : public Error {
public:
    explicit ZeroProduct(std::int64_t n)
        : Error("invariant V_" + std::to_string(n) + " has a zero factor"), n_(n) {}

    std::int64_t n() const { return n_; }

private:
    std::int64_t n_;
};

/// A stated precondition of a closed-form formula does not hold.
class ConditionViolated : public Error {
public:
    explicit ConditionViolated(const std::string& description)
        : Error("condition violated: " + description), description_(description) {}

    const std::string& description() const { return description_; }

private:
    std::string description_;
};

class SeedZero : public ConditionViolated {
public:
    explicit SeedZero(int index)
        : ConditionViolated("x_{" + std::to_string(index) + "} = 0"), index_(index) {}

    int index() const { return index_; }

private:
    int index_;
};

class FormulaDenominatorZero : public Error {
public:
    FormulaDenominatorZero(std::int64_t s, int j, const std::string& factor)
        : Error("denominator factor " + factor + " vanishes at s=" + std::to_string(s) +
                " in residue class j=" + std::to_string(j)),
          s_(s),
          j_(j),
          factor_(factor) {}

    std::int64_t s() const { return s_; }
    int j() const { return j_; }
    const std::string& factor() const { return factor_; }

private:
    std::int64_t s_;
    int j_;
    std::string factor_;
};

class DegenerateScale : public Error {
public:
    DegenerateScale() : Error("group parameter t must be nonzero") {}
};

}  // namespace rdelab
