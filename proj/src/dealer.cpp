#include "wpss/dealer.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wpss/coxeter.hpp"
#include "wpss/error.hpp"
#include "wpss/polycyclic.hpp"

namespace wpss {

namespace {

constexpr int kMaxAttempts = 100;
// Stream ids for derive_rng; per-bit streams use the bit index itself.
constexpr std::uint64_t kPlatformStream = 0xfffffffffffff001ULL;
constexpr std::uint64_t kSchemeIdStream = 0xfffffffffffff002ULL;
constexpr std::uint64_t kCoverageStream = 0xfffffffffffff003ULL;

bool is_coxeter(const GroupPresentation& p) { return p.family == Family::coxeter; }

// Coxeter generators are public involutions, so words are kept as positive
// letters with squares cancelled; anyone could do this reduction anyway.
Word involution_reduce(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().generator == l.generator)
            out.pop_back();
        else
            out.push_back(pos(l.generator));
    }
    return Word(std::move(out));
}

Word public_reduce(const GroupPresentation& p, const Word& w) {
    return is_coxeter(p) ? involution_reduce(w) : free_reduce(w);
}

Word random_element(const GroupPresentation& p, std::size_t length, Rng& rng) {
    const auto k = static_cast<std::uint32_t>(p.generators.size());
    if (!is_coxeter(p)) return random_word(k, length, rng);
    // No letter repeated back to back; uniform over the k-1 choices.
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
        auto g = static_cast<std::uint32_t>(uniform_below(rng, i == 0 ? k : k - 1));
        if (i > 0 && g >= w.letters().back().generator) ++g;
        w.push_back(pos(g));
    }
    return w;
}

// A random cyclic rotation of r or r^-1; still a consequence of r.
Word relator_variant(const GroupPresentation& p, const Word& r, Rng& rng) {
    Word base = uniform_below(rng, 2) ? invert(r) : r;
    if (is_coxeter(p)) base = involution_reduce(base);
    const auto shift = uniform_below(rng, base.size());
    std::vector<Letter> rotated(base.begin() + static_cast<std::ptrdiff_t>(shift), base.end());
    rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(shift));
    return Word(std::move(rotated));
}

const Word& relator_word(const GroupPresentation& p, std::size_t index) {
    const auto* r = p.find(index);
    if (!r) throw ValidationError("relator " + std::to_string(index) + " is not part of the presentation");
    return r->word;
}

// prod_j [r'_c(j), w_j], with `core` spliced in at a random factor boundary
// when given, then optionally conjugated.
Word draw_product(const GroupPresentation& p, const std::vector<std::size_t>& subset, const EncodingConfig& cfg,
                  Rng& rng, const Word* core) {
    if (subset.empty()) throw ValidationError("relator subset must be nonempty");
    const auto l = cfg.factors_for(p.relators.size());
    const auto splice = core ? uniform_below(rng, l + 1) : l + 1;
    Word w;
    for (std::size_t j = 0; j < l; ++j) {
        if (j == splice) w.append(*core);
        const auto r = relator_variant(p, relator_word(p, subset[j % subset.size()]), rng);
        w.append(commutator(r, random_element(p, cfg.conjugator_length, rng)));
    }
    if (splice == l) w.append(*core);
    if (cfg.conjugate_whole_word) w = conjugate(w, random_element(p, cfg.conjugator_length, rng));
    return public_reduce(p, w);
}

Word draw_core(const GroupPresentation& p, const EncodingConfig& cfg, Rng& rng) {
    return random_element(p, 1 + uniform_below(rng, cfg.conjugator_length), rng);
}

enum class Check { accept, wrong, undecided };

Check expect(const WordProblemSolver& solver, const Word& w, Verdict wanted) {
    const auto d = solver.decide(w);
    if (d.verdict == Verdict::undecided) return Check::undecided;
    return d.verdict == wanted ? Check::accept : Check::wrong;
}

// Retry loop shared by the encoders. Nothing leaves this function without
// `check` having accepted it.
template <class Draw, class CheckFn>
Word verified(const EncodingConfig& cfg, Draw&& draw, CheckFn&& check, const char* what) {
    int too_long = 0;
    int empty = 0;
    int undecided = 0;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const Word w = draw();
        // An empty word would announce its own bit.
        if (w.empty()) {
            ++empty;
            continue;
        }
        if (w.size() > cfg.max_word_length) {
            ++too_long;
            continue;
        }
        switch (check(w)) {
            case Check::accept: return w;
            case Check::undecided: ++undecided; break;
            case Check::wrong: break;
        }
    }
    const std::string detail = std::string(what) + ": no acceptable word after " + std::to_string(kMaxAttempts) +
                               " attempts (" + std::to_string(too_long) + " over the length cap of " +
                               std::to_string(cfg.max_word_length) + ", " + std::to_string(empty) + " empty, " + std::to_string(undecided) +
                               " undecided within the decode budget)";
    if (undecided > 0 && undecided >= too_long) throw BudgetError(detail);
    throw ValidationError(detail);
}

std::size_t coverage_target(double fraction, std::size_t size) {
    const auto c = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(size) - 1e-9));
    return std::clamp<std::size_t>(c, 1, size);
}

std::vector<std::size_t> random_subset(const std::vector<std::size_t>& pool, std::size_t size, Rng& rng) {
    auto copy = pool;
    shuffle_range(copy.begin(), copy.end(), rng);
    copy.resize(size);
    return copy;
}

// Relator subsets per word. Every 1-bit word covers at least the coverage
// target; 1-bit words jointly cover every relator; 0-bit words draw a
// subset of the same size for camouflage.
std::vector<std::vector<std::size_t>> plan_subsets(const std::vector<std::size_t>& indices, const Bits& bits,
                                                   double fraction, Rng& rng) {
    const auto c = coverage_target(fraction, indices.size());
    std::size_t ones_left = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    auto uncovered = indices;
    shuffle_range(uncovered.begin(), uncovered.end(), rng);

    std::vector<std::vector<std::size_t>> plan;
    for (auto b : bits) {
        if (!b) {
            plan.push_back(random_subset(indices, c, rng));
            continue;
        }
        const auto fresh = (uncovered.size() + ones_left - 1) / ones_left;
        std::vector<std::size_t> subset(uncovered.end() - static_cast<std::ptrdiff_t>(fresh), uncovered.end());
        uncovered.resize(uncovered.size() - fresh);
        --ones_left;
        if (subset.size() < c) {
            std::vector<std::size_t> others;
            for (auto j : indices)
                if (std::find(subset.begin(), subset.end(), j) == subset.end()) others.push_back(j);
            const auto extra = random_subset(others, c - subset.size(), rng);
            subset.insert(subset.end(), extra.begin(), extra.end());
        }
        shuffle_range(subset.begin(), subset.end(), rng);
        plan.push_back(std::move(subset));
    }
    return plan;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_bits(const Bits& bits, const EncodingConfig& cfg) {
    if (bits.empty()) throw ValidationError("message must contain at least one bit");
    if (bits.size() > cfg.max_message_bits)
        throw ValidationError("message of " + std::to_string(bits.size()) + " bits exceeds the cap of " +
                              std::to_string(cfg.max_message_bits));
}

}  // namespace

std::string_view to_string(PlatformFamily f) noexcept {
    return f == PlatformFamily::coxeter ? "coxeter" : "polycyclic-builtin";
}

std::optional<PlatformFamily> parse_platform_family(std::string_view s) noexcept {
    if (s == "coxeter") return PlatformFamily::coxeter;
    if (s == "polycyclic-builtin" || s == "polycyclic") return PlatformFamily::polycyclic_builtin;
    return std::nullopt;
}

void EncodingConfig::validate() const {
    if (!(coverage_fraction > 0.0 && coverage_fraction <= 1.0))
        throw ValidationError("coverage fraction must lie in (0, 1]");
    if (conjugator_length == 0) throw ValidationError("conjugator length must be at least 1");
    if (max_word_length == 0 || max_message_bits == 0) throw ValidationError("caps must be positive");
    if (decode_budget.explored_words == 0 || decode_budget.rewrite_steps == 0)
        throw ValidationError("decode budget must be positive");
}

GroupPresentation generate_platform(PlatformFamily family, const SchemeParams& params, std::uint64_t seed,
                                    const std::string& builtin, std::string* platform_label) {
    auto rng = derive_rng(seed, kPlatformStream);
    const auto m = params.m();

    if (family == PlatformFamily::coxeter) {
        if (!builtin.empty()) throw ValidationError("builtin names apply to the polycyclic family only");
        std::size_t k = 2;
        while (binomial(k, 2) < m) ++k;
        if (k > 0xffff) throw ValidationError("m = " + std::to_string(m) + " needs more Coxeter generators than supported");
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
        shuffle_range(pairs.begin(), pairs.end(), rng);
        pairs.resize(m);

        GroupPresentation p;
        p.generators = Alphabet::numbered("s", k);
        p.family = Family::coxeter;
        p.public_facts = PublicFacts::coxeter_involutions;
        for (const auto& [i, j] : pairs) {
            const auto mij = static_cast<std::uint32_t>(2 + uniform_below(rng, 5));
            p.relators.push_back(Relator{p.relators.size() + 1, braid_relator(i, j, mij)});
        }
        if (platform_label) *platform_label = "coxeter";
        return p;
    }

    // Polycyclic builtins by distributable relator count.
    std::vector<std::string> names;
    if (m == 3) names = {"dihedral", "heisenberg"};
    names.push_back("abelian");
    if (!builtin.empty()) {
        if (builtin != "dihedral" && builtin != "heisenberg" && builtin != "abelian")
            throw ValidationError("unknown builtin '" + builtin + "' (known: dihedral, heisenberg, abelian)");
        if (std::find(names.begin(), names.end(), builtin) == names.end())
            throw ValidationError("builtin '" + builtin + "' has 3 distributable relators, but the scheme needs m = " +
                                  std::to_string(m) + "; use --builtin abelian or a Coxeter platform");
        names = {builtin};
    }
    const auto& pick = names[uniform_below(rng, names.size())];

    BuiltinPolycyclic b = [&] {
        if (pick == "dihedral") return builtin_dihedral(static_cast<std::uint32_t>(3 + uniform_below(rng, 6)));
        if (pick == "heisenberg") return builtin_heisenberg();
        // Z^(k-f) x finite cyclic factors with C(k,2) + f = m, 0 <= f <= k.
        std::size_t k = 1;
        while (binomial(k, 2) + k < m) ++k;
        const auto f = m - binomial(k, 2);
        std::vector<std::uint32_t> orders(k, 0);
        std::vector<std::size_t> slots(k);
        for (std::size_t i = 0; i < k; ++i) slots[i] = i;
        shuffle_range(slots.begin(), slots.end(), rng);
        for (std::size_t i = 0; i < f; ++i) orders[slots[i]] = static_cast<std::uint32_t>(2 + uniform_below(rng, 8));
        return builtin_abelian(orders);
    }();
    if (distributable_relator_count(b.presentation) != m)
        throw ValidationError("no builtin polycyclic presentation has exactly m = " + std::to_string(m) + " relators");
    if (platform_label) *platform_label = b.parameters.empty() ? b.name : b.name + " " + b.parameters;
    return to_group_presentation(b.presentation, Alphabet::numbered("x", b.presentation.rank()));
}

Scheme setup_scheme(PlatformFamily family, const SchemeParams& params, std::uint64_t seed,
                    const std::string& builtin) {
    Scheme s;
    s.params = params;
    s.presentation = generate_platform(family, params, seed, builtin, &s.platform);
    auto rng = derive_rng(seed, kSchemeIdStream);
    s.scheme_id = SchemeId::random(rng);
    return s;
}

std::unique_ptr<WordProblemSolver> dealer_solver(const GroupPresentation& p, const Budget& budget) {
    SolverOptions opts;
    opts.budget = budget;
    opts.assume_consistent = true;  // only dealer-issued builtins reach here
    return make_solver(p, opts);
}

Word encode_identity_word(const GroupPresentation& p, const WordProblemSolver& solver,
                          const std::vector<std::size_t>& relator_subset, const EncodingConfig& cfg, Rng& rng) {
    cfg.validate();
    return verified(
        cfg, [&] { return draw_product(p, relator_subset, cfg, rng, nullptr); },
        [&](const Word& w) { return expect(solver, w, Verdict::identity); }, "identity word");
}

Word encode_nonidentity_word(const GroupPresentation& p, const WordProblemSolver& solver,
                             const std::vector<std::size_t>& relator_subset, const EncodingConfig& cfg, Rng& rng) {
    cfg.validate();
    return verified(
        cfg,
        [&] {
            const auto core = draw_core(p, cfg, rng);
            return draw_product(p, relator_subset, cfg, rng, &core);
        },
        [&](const Word& w) { return expect(solver, w, Verdict::non_identity); }, "non-identity word");
}

EncodeReport encode_message(const Scheme& scheme, const Bits& bits, const EncodingConfig& cfg) {
    cfg.validate();
    check_bits(bits, cfg);
    const auto& p = scheme.presentation;
    const auto solver = dealer_solver(p, cfg.decode_budget);

    std::vector<std::size_t> indices;
    for (const auto& r : p.relators) indices.push_back(r.index);
    auto plan_rng = derive_rng(cfg.seed, kCoverageStream);
    const auto plan = plan_subsets(indices, bits, cfg.coverage_fraction, plan_rng);

    EncodeReport report;
    report.message.scheme_id = scheme.scheme_id;
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        auto rng = derive_rng(cfg.seed, i);
        report.message.words.push_back(bits[i] ? encode_identity_word(p, *solver, plan[i], cfg, rng)
                                               : encode_nonidentity_word(p, *solver, plan[i], cfg, rng));
        report.relators_used.push_back(sorted(plan[i]));
        if (bits[i]) covered.insert(plan[i].begin(), plan[i].end());
    }
    report.relators_covered = covered.size();
    if (covered.empty())
        report.warnings.push_back("message has no 1-bits, so no identity word uses the relators; "
                                  "full relator coverage is impossible");
    return report;
}

EncodeReport encode_for_recipient(const Scheme& scheme, const Share& recipient, const Bits& bits,
                                  const EncodingConfig& cfg) {
    cfg.validate();
    check_bits(bits, cfg);
    const auto& p = scheme.presentation;
    if (p.family != Family::coxeter)
        throw ValidationError("targeted messages need a Coxeter platform: a single share of a polycyclic "
                              "presentation generally lacks the rules to collect words");
    if (!(recipient.scheme_id == scheme.scheme_id)) throw IntegrityError("share belongs to a different scheme");
    for (const auto& r : recipient.relators)
        if (!p.find(r.index) || !(p.find(r.index)->word == r.word))
            throw IntegrityError("share relator " + std::to_string(r.index) + " does not match the scheme");

    GroupPresentation local;
    local.generators = recipient.generators;
    local.family = Family::coxeter;
    local.public_facts = recipient.public_facts;
    local.relators = recipient.relators;
    const auto full = dealer_solver(p, cfg.decode_budget);
    const auto mine = dealer_solver(local, cfg.decode_budget);

    std::vector<std::size_t> indices;
    for (const auto& r : local.relators) indices.push_back(r.index);
    const auto c = coverage_target(cfg.coverage_fraction, indices.size());

    EncodeReport report;
    report.message.scheme_id = scheme.scheme_id;
    std::set<std::size_t> covered;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        auto rng = derive_rng(cfg.seed, i);
        const auto subset = random_subset(indices, c, rng);
        Word w;
        if (bits[i]) {
            // Identity in <gens | R_j> already implies identity in G.
            w = verified(
                cfg, [&] { return draw_product(local, subset, cfg, rng, nullptr); },
                [&](const Word& x) { return expect(*mine, x, Verdict::identity); }, "targeted identity word");
            covered.insert(subset.begin(), subset.end());
        } else {
            w = verified(
                cfg,
                [&] {
                    const auto core = draw_core(local, cfg, rng);
                    return draw_product(local, subset, cfg, rng, &core);
                },
                [&](const Word& x) {
                    const auto a = expect(*mine, x, Verdict::non_identity);
                    return a == Check::accept ? expect(*full, x, Verdict::non_identity) : a;
                },
                "targeted non-identity word");
        }
        report.message.words.push_back(std::move(w));
        report.relators_used.push_back(sorted(subset));
    }
    report.relators_covered = covered.size();
    return report;
}

Bits insert_at(const Bits& payload, const Bits& signature, std::size_t offset) {
    if (offset > payload.size()) throw ValidationError("signature offset beyond the payload");
    Bits out(payload.begin(), payload.begin() + static_cast<std::ptrdiff_t>(offset));
    out.insert(out.end(), signature.begin(), signature.end());
    out.insert(out.end(), payload.begin() + static_cast<std::ptrdiff_t>(offset), payload.end());
    return out;
}

Bits embed_signature(const Bits& payload, const Bits& signature, Rng& rng, std::size_t max_message_bits) {
    if (payload.size() + signature.size() > max_message_bits)
        throw ValidationError("payload plus signature (" + std::to_string(payload.size() + signature.size()) +
                              " bits) exceeds the message cap of " + std::to_string(max_message_bits));
    if (signature.empty()) return payload;
    return insert_at(payload, signature, uniform_below(rng, payload.size() + 1));
}

}  // namespace wpss
