#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

// Every domain failure carries a stable name (e.g. "NotEssential") that the
// CLI prints verbatim, plus a free-form detail message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + (detail.empty() ? "" : ": " + detail)),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail = {}) {
    throw Error(name, detail);
}

}  // namespace subshift
