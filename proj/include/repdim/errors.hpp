#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

// Action matrices fail one of the defining relations of the algebra.
struct RelationViolation : std::runtime_error {
    explicit RelationViolation(const std::string& what) : std::runtime_error(what) {}
};

// A question the certified procedures could not settle (isomorphism search
// exhausted with agreeing invariants, non-split residue field).  Verification
// runs abort on this; nothing is guessed.
struct Undecided : std::runtime_error {
    explicit Undecided(const std::string& what) : std::runtime_error(what) {}
};

// A certificate check failed; `component` names the check.
struct CheckFailure : std::runtime_error {
    CheckFailure(std::string component, const std::string& what)
        : std::runtime_error(component + ": " + what), component(std::move(component))
    {
    }
    std::string component;
};

// Resolution did not terminate within the depth cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace repdim
