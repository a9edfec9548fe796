#pragma once

#include <string>
#include <vector>

namespace ainfty {

/* Outcome of a mathematical check. Failures are report content, not errors;
 * `certificate` states what the verdict covers (e.g. "all n" vs "n <= 6"). */
struct CheckReport {
    bool ok = true;
    std::string what;        // first violated instance, human-readable
    std::string certificate; // scope of the verdict

    static CheckReport pass(std::string cert = "")
    {
        return CheckReport{true, "", std::move(cert)};
    }
    static CheckReport fail(std::string what, std::string cert = "")
    {
        return CheckReport{false, std::move(what), std::move(cert)};
    }
};

} // namespace ainfty
