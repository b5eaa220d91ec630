#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcgraph {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed files, unsupported generator sizes, ...
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class SizeBudgetExceeded : public Error {
  public:
    SizeBudgetExceeded(const std::string& what, std::size_t reached, std::size_t budget)
        : Error(what + ": size budget " + std::to_string(budget) + " exceeded (reached " +
                std::to_string(reached) + ")"),
          reached_{reached},
          budget_{budget} {}

    [[nodiscard]] std::size_t reached() const { return reached_; }
    [[nodiscard]] std::size_t budget() const { return budget_; }

  private:
    std::size_t reached_;
    std::size_t budget_;
};

class LoopPresent : public Error {
  public:
    explicit LoopPresent(std::size_t v)
        : Error("digraph has a loop at vertex " + std::to_string(v) + "; chromatic number is undefined"), vertex_{v} {}
    [[nodiscard]] std::size_t vertex() const { return vertex_; }

  private:
    std::size_t vertex_;
};

class NotSymmetric : public Error {
  public:
    using Error::Error;
};

class MissingLabels : public Error {
  public:
    using Error::Error;
};

/// Raised when a constructed retraction fails validation. Indicates a bug.
class RetractionInvalid : public Error {
  public:
    using Error::Error;
};

class TableIncomplete : public Error {
  public:
    using Error::Error;
};

/// A recomputed b-table value disagrees with the cached one.
class CacheMismatch : public Error {
  public:
    using Error::Error;
};

}  // namespace arcgraph
