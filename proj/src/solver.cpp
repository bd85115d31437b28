#include "wpss/solver.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "wpss/coxeter.hpp"
#include "wpss/error.hpp"
#include "wpss/polycyclic.hpp"

namespace wpss {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::identity: return "identity";
        case Verdict::non_identity: return "non-identity";
        case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

Budget Budget::from_environment() {
    const char* raw = std::getenv("WPSS_BUDGET");
    if (raw == nullptr) return Budget{};
    std::uint64_t cap = 0;
    const auto* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, cap);
    if (ec != std::errc() || ptr != end || cap == 0) return Budget{};
    return uniform(cap);
}

std::unique_ptr<WordProblemSolver> make_solver(const GroupPresentation& p, const SolverOptions& options) {
    switch (p.family) {
        case Family::coxeter:
            return std::make_unique<CoxeterSolver>(validate_coxeter(p), options.budget.explored_words);
        case Family::polycyclic:
            if (!options.assume_consistent)
                throw ValidationError("polycyclic presentations are not checked for consistency; "
                                      "assert consistency explicitly to use them");
            return std::make_unique<PolycyclicSolver>(polycyclic_from_presentation(p, options.allow_partial),
                                                      options.budget.rewrite_steps);
        case Family::raw: break;
    }
    throw ValidationError("no word-problem engine for raw presentations");
}

}  // namespace wpss
