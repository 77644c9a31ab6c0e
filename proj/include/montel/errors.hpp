#pragma once

#include <stdexcept>
#include <string>

namespace montel {

// Invalid caller-supplied data: dimension mismatches, malformed payloads,
// violated operation preconditions. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace montel
