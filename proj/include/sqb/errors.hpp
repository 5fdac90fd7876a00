#pragma once

#include <stdexcept>
#include <string>

namespace sqb {

/// Base of every error raised by the library. Each subclass names one failure mode.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public Error { public: using Error::Error; };
class ConvergenceError : public Error { public: using Error::Error; };
class QuadratureError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class StripError : public Error { public: using Error::Error; };
class ContourError : public Error { public: using Error::Error; };
class NormError : public Error { public: using Error::Error; };
class IntegrabilityError : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };

/// Thrown by vertical-line integration when the integrand has not decayed at the
/// truncation height. Carries the offending ratio |F(edge)| / peak.
class TruncationWarning : public Error {
public:
    TruncationWarning(const std::string& what, double ratio) : Error(what), ratio_(ratio) {}
    double ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

} // namespace sqb
