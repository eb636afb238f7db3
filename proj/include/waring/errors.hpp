#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Floor of an enclosure is ambiguous: the interval contains an integer at
// the highest precision tried. Callers either refine or record the point.
struct FloorAmbiguous : std::runtime_error {
    explicit FloorAmbiguous(const std::string& what) : std::runtime_error(what) {}
};

// A root bracket whose endpoint signs could not be certified.
struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at or across the removable singularity t = 1.
struct SingularAt1 : std::runtime_error {
    explicit SingularAt1(const std::string& what) : std::runtime_error(what) {}
};

// A certification loop reached its maximum precision without a verdict.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace waring
