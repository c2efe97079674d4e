#ifndef QUASITORIC_ERRORS_HPP
#define QUASITORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quasitoric {

// Error taxonomy maps onto CLI exit codes:
//   input_error        -> 2  (malformed/invalid input)
//   precondition_error -> 3  (valid input outside an operation's domain)
//   verification_error -> 4  (an internal cross-check that should never fire did)
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested factorization/construction is well-posed but the defining
// condition fails on this input (e.g. splitting a set that is not a cTFP).
struct condition_failed : precondition_error {
    explicit condition_failed(const std::string& msg) : precondition_error(msg) {}
};

// The operation needs an ML-degree-1 (doubly chordal bipartite) model.
struct not_doubly_chordal : precondition_error {
    explicit not_doubly_chordal(const std::string& msg) : precondition_error(msg) {}
};

// Level assignment on the clique poset hit an inconsistency.
struct not_tree_error : verification_error {
    explicit not_tree_error(const std::string& msg) : verification_error(msg) {}
};

// An assembled matrix violated one of its own construction invariants.
struct construction_error : verification_error {
    explicit construction_error(const std::string& msg) : verification_error(msg) {}
};

// A decomposition step produced parts that fail the partition/reassembly checks.
struct decomposition_invariant_failure : verification_error {
    explicit decomposition_invariant_failure(const std::string& msg) : verification_error(msg) {}
};

}  // namespace quasitoric

#endif
