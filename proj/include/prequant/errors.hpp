#pragma once

#include <stdexcept>
#include <string>

namespace prequant {

// A mathematical precondition (compactness, monotonicity, M != CP^n, ...) does not hold.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail)
        : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

class NoMinimalElement : public HypothesisError {
public:
    explicit NoMinimalElement(const std::string& detail) : HypothesisError("NoMinimalElement", detail) {}
};

// The window-stability protocol hit its cap before two consecutive verdicts agreed.
class Inconclusive : public HypothesisError {
public:
    explicit Inconclusive(const std::string& detail) : HypothesisError("Inconclusive", detail) {}
};

}  // namespace prequant
