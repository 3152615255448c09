#pragma once

#include <stdexcept>
#include <string>

namespace quigs {

// Base for all library errors. `name()` is a stable machine-readable
// identifier echoed by the CLI in its error records.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Dimension or index mismatch between operands.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error("shape_error", what) {}
};

// A stated precondition on values (not shapes) was violated.
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error("contract_error", what) {}
};

// A configured resource limit would be exceeded.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error("capacity_error", what) {}
};

// Floating-point health check failed (norm drift, probability leakage).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error("numerical_error", what) {}
};

// Parameters leave the physical domain of a formula.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

// Scenario parameters are degenerate for the requested analysis.
class DegenerateConfigurationError : public Error {
public:
    explicit DegenerateConfigurationError(const std::string& what)
        : Error("degenerate_configuration", what) {}
};

// A protocol's feasibility preconditions do not hold.
class ProtocolInfeasibleError : public Error {
public:
    explicit ProtocolInfeasibleError(const std::string& what)
        : Error("protocol_infeasible", what) {}
};

// A post-selection outcome has (near-)zero probability; carries the value.
class PostSelectionError : public Error {
public:
    PostSelectionError(const std::string& what, double probability)
        : Error("post_selection_impossible", what), probability_(probability) {}

    double probability() const noexcept { return probability_; }

private:
    double probability_;
};

}  // namespace quigs
