#pragma once

#include <stdexcept>
#include <string>

namespace biham {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class NotASimplePole : public Error {
public:
    explicit NotASimplePole(const std::string& what) : Error(what) {}
};

class NonPolynomialIntegrand : public Error {
public:
    explicit NonPolynomialIntegrand(const std::string& what) : Error(what) {}
};

// Euler transport hits a monomial whose weight cancels the shift constant.
class Resonance : public Error {
public:
    explicit Resonance(const std::string& what) : Error(what) {}
};

class FlatnessFailure : public Error {
public:
    explicit FlatnessFailure(const std::string& what) : Error(what) {}
};

class BadCentralInvariant : public Error {
public:
    explicit BadCentralInvariant(const std::string& what) : Error(what) {}
};

class NonCanonicalChart : public Error {
public:
    explicit NonCanonicalChart(const std::string& what) : Error(what) {}
};

class InverseMismatch : public Error {
public:
    explicit InverseMismatch(const std::string& what) : Error(what) {}
};

class NotNormalForm : public Error {
public:
    explicit NotNormalForm(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace biham
