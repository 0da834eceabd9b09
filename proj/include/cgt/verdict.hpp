#ifndef CGT_VERDICT_HPP
#define CGT_VERDICT_HPP

#include <string>
#include <vector>

namespace cgt {

/// Result of a structural check: ok, or a list of named violations.
struct Verdict {
    bool ok = true;
    std::vector<std::string> issues;

    void fail(std::string why) {
        ok = false;
        issues.push_back(std::move(why));
    }
    explicit operator bool() const { return ok; }
};

}  // namespace cgt

#endif
