#ifndef FGM_ERRORS_HPP
#define FGM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgm {

/// Argument outside the domain of the model (negative coordinate, |theta| > 1, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The score has a pole: 1 + theta * w_i == 0 for some observation.
class PoleError : public std::runtime_error {
   public:
    PoleError(std::size_t index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

/// Exact-only operation requested on approximate scalars, or mixed kinds.
class ModeError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Every c-value is identical; the ML-degree is undefined and the MLE sits on the boundary.
class AllEqualError : public std::runtime_error {
   public:
    AllEqualError(int boundary_mle, const std::string& what)
        : std::runtime_error(what), boundary_mle_(boundary_mle) {}
    /// +1 or -1, the sign of the shared c-value.
    int boundary_mle() const noexcept { return boundary_mle_; }

   private:
    int boundary_mle_;
};

/// All observations are degenerate (w_i == 0); the likelihood is flat in theta.
class NoDataError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class DataError : public std::runtime_error {
   public:
    DataError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace fgm

#endif  // FGM_ERRORS_HPP
