#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eoplab {

/// Raised when an algebraic identity that the construction guarantees fails
/// to hold in an actual computation.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Outcome of checking one identity against one probe function.
struct Check {
    std::string identity;
    std::string probe;
    bool passed = false;
};

struct VerificationReport {
    std::vector<Check> checks;

    void record(std::string identity, std::string probe, bool passed) {
        checks.push_back({std::move(identity), std::move(probe), passed});
    }
    bool all_passed() const {
        for (const Check& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
    const Check* first_failure() const {
        for (const Check& c : checks) {
            if (!c.passed) return &c;
        }
        return nullptr;
    }
    /// Throws VerificationError naming the first failed check.
    void require() const {
        if (const Check* c = first_failure()) {
            throw VerificationError("verification failed: " + c->identity + " on probe " +
                                    c->probe);
        }
    }
};

}  // namespace eoplab
