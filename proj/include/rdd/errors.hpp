#pragma once

#include <stdexcept>
#include <string>

namespace rdd {

// Base class for all library errors. Subclasses are grouped by the layer
// that raises them so callers can catch at the granularity they need.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- graph construction ---

class GraphError : public Error {
public:
    using Error::Error;
};

class DuplicateIdError : public GraphError {
public:
    using GraphError::GraphError;
};

class DanglingDependencyError : public GraphError {
public:
    using GraphError::GraphError;
};

class SelfDependencyError : public GraphError {
public:
    using GraphError::GraphError;
};

class WidthExceededError : public GraphError {
public:
    using GraphError::GraphError;
};

class UnknownNodeError : public GraphError {
public:
    using GraphError::GraphError;
};

// --- completion parsing ---

class ParseError : public Error {
public:
    using Error::Error;
};

// No unit sentence and no bullet items (also: an empty sub-problem list).
class MalformedDecompositionError : public ParseError {
public:
    using ParseError::ParseError;
};

// Dependency-mode bullet without a leading "[P-k]" identifier.
class MissingIdError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnresolvedDependencyError : public ParseError {
public:
    using ParseError::ParseError;
};

// --- scheduling ---

class CycleError : public Error {
public:
    using Error::Error;
};

// --- backends ---

class BackendError : public Error {
public:
    using Error::Error;
};

class TimeoutError : public BackendError {
public:
    using BackendError::BackendError;
};

class RateLimitedError : public BackendError {
public:
    using BackendError::BackendError;
};

class ProtocolError : public BackendError {
public:
    using BackendError::BackendError;
};

class ReplayExhaustedError : public BackendError {
public:
    using BackendError::BackendError;
};

class ReplayMismatchError : public BackendError {
public:
    using BackendError::BackendError;
};

class UnparsableBenchmarkProblemError : public BackendError {
public:
    using BackendError::BackendError;
};

// --- prompts / assets ---

class PromptError : public Error {
public:
    using Error::Error;
};

class MissingPlaceholderValueError : public PromptError {
public:
    using PromptError::PromptError;
};

class ExtraSubsolutionsError : public PromptError {
public:
    using PromptError::PromptError;
};

class AssetCorruptError : public PromptError {
public:
    using PromptError::PromptError;
};

// --- analysis / reporting ---

class AnalysisError : public Error {
public:
    using Error::Error;
};

class MissingVerdictsError : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class GridMismatchError : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class InvalidDifficultyError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UnknownInstanceIdError : public Error {
public:
    using Error::Error;
};

} // namespace rdd
