#ifndef HOPFCALC_CHECK_RESULT_HPP
#define HOPFCALC_CHECK_RESULT_HPP

#include <optional>
#include <string>

#include "hopfcalc/matrix.hpp"

namespace hopf {

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "inconclusive";
    }
}

/// Three-valued verdict with an optional concrete witness (a vector or a
/// certificate matrix) and a human-readable explanation. A "no" always
/// carries a witness; "inconclusive" only ever comes from the randomized
/// flatness tests.
struct CheckResult {
    Verdict verdict;
    std::optional<Matrix> witness;
    std::string detail;

    bool ok() const { return verdict == Verdict::yes; }

    static CheckResult pass(std::string detail = "") {
        return CheckResult{Verdict::yes, std::nullopt, std::move(detail)};
    }
    static CheckResult fail(Matrix witness, std::string detail) {
        return CheckResult{Verdict::no, std::move(witness), std::move(detail)};
    }
    static CheckResult undecided(std::string detail) {
        return CheckResult{Verdict::inconclusive, std::nullopt, std::move(detail)};
    }
};

}  // namespace hopf

#endif
