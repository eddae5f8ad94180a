#pragma once

#include "aknsmf/bicomplex.hpp"

#include <string>

namespace aknsmf {

/// Outcome of a single verification: pass, or fail carrying the first
/// nonzero residual in canonical text form.
struct CheckResult {
    bool pass = true;
    std::string witness;

    static CheckResult ok() { return {true, ""}; }
    static CheckResult failed(std::string w) { return {false, std::move(w)}; }
    static CheckResult of(const Poly& residual) {
        return residual.is_zero() ? ok() : failed(residual.str());
    }
    static CheckResult of(const VBForm& residual) {
        return residual.is_zero() ? ok() : failed(residual.str());
    }

    CheckResult& merge(const CheckResult& o) {
        if (pass && !o.pass) {
            pass = false;
            witness = o.witness;
        }
        return *this;
    }
};

}  // namespace aknsmf
