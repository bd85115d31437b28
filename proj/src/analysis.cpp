#include "wpss/analysis.hpp"

#include <algorithm>

#include "wpss/error.hpp"

namespace wpss {

std::string_view to_string(AttackVerdict v) noexcept {
    switch (v) {
        case AttackVerdict::proved_identity: return "proved-identity";
        case AttackVerdict::proved_non_identity: return "proved-non-identity";
        case AttackVerdict::undecided: return "undecided";
    }
    return "undecided";
}

std::size_t CoalitionReport::count(AttackVerdict v) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(words.begin(), words.end(), [v](const AttackWord& w) { return w.verdict == v; }));
}

CoalitionReport coalition_attack(std::span<const Share> shares, const EncodedMessage& msg, const Budget& budget) {
    const auto rec = reconstruct(shares);
    if (!(rec.scheme_id == msg.scheme_id)) throw IntegrityError("message belongs to a different scheme than the shares");

    CoalitionReport r;
    r.participants = rec.participants;
    r.missing = rec.missing;
    r.complete = rec.complete;
    r.family = rec.presentation.family;

    SolverOptions opts;
    opts.budget = budget;
    opts.assume_consistent = true;
    opts.allow_partial = !rec.complete;
    const auto solver = make_solver(rec.presentation, opts);
    const bool exact_partial = r.family == Family::coxeter;

    for (const auto& w : msg.words) {
        if (w.generator_bound() > solver->generator_count())
            throw ValidationError("message word uses generators outside the presentation");
        const auto d = solver->decide(w);
        AttackWord a;
        a.stats = d.stats;
        a.note = d.note;
        if (d.verdict == Verdict::identity) {
            a.verdict = AttackVerdict::proved_identity;
            a.in_partial = Verdict::identity;
        } else if (d.verdict == Verdict::non_identity) {
            if (r.complete) {
                a.verdict = AttackVerdict::proved_non_identity;
                a.in_partial = Verdict::non_identity;
            } else if (exact_partial) {
                a.in_partial = Verdict::non_identity;
                a.note = "non-identity in G' says nothing about G";
            } else {
                // A partial polycyclic presentation may be inconsistent, so a
                // nontrivial collected form is not a proof even for G'.
                a.note = "collected to a nontrivial form; not a proof for a partial presentation";
            }
        }
        r.words.push_back(std::move(a));
    }
    return r;
}

std::vector<PoolCandidate> pool_attack(std::span<const GroupPresentation> pool, const std::vector<std::string>& labels,
                                       const EncodedMessage& msg, const Bits& known_signature, const Budget& budget) {
    std::vector<PoolCandidate> out;
    for (std::size_t c = 0; c < pool.size(); ++c) {
        PoolCandidate cand;
        cand.index = c;
        cand.label = c < labels.size() ? labels[c] : "candidate " + std::to_string(c + 1);
        try {
            SolverOptions opts;
            opts.budget = budget;
            opts.assume_consistent = true;  // candidates are the attacker's own guesses
            opts.allow_partial = true;
            const auto solver = make_solver(pool[c], opts);
            Bits bits;
            for (const auto& w : msg.words) {
                if (w.generator_bound() > solver->generator_count())
                    throw ValidationError("message uses more generators than the candidate has");
                const auto d = solver->decide(w);
                cand.decoded.push_back(d.verdict == Verdict::undecided ? '?' : d.verdict == Verdict::identity ? '1' : '0');
                cand.undecided += d.verdict == Verdict::undecided;
                bits.push_back(d.verdict == Verdict::identity);
            }
            // Undecided positions must never complete a match, and an empty
            // signature identifies nothing.
            auto report = known_signature.empty() ? SignatureReport{} : verify_signature(bits, known_signature);
            for (auto off : report.offsets) {
                const bool clean = std::none_of(cand.decoded.begin() + static_cast<std::ptrdiff_t>(off),
                                                cand.decoded.begin() +
                                                    static_cast<std::ptrdiff_t>(off + known_signature.size()),
                                                [](char ch) { return ch == '?'; });
                if (clean) cand.offsets.push_back(off);
            }
            cand.matched = !cand.offsets.empty();
        } catch (const Error& e) {
            cand.error = e.what();
        }
        out.push_back(std::move(cand));
    }
    std::stable_sort(out.begin(), out.end(), [](const PoolCandidate& a, const PoolCandidate& b) {
        if (a.matched != b.matched) return a.matched;
        if (a.error.empty() != b.error.empty()) return a.error.empty();
        if (a.offsets.size() != b.offsets.size()) return a.offsets.size() > b.offsets.size();
        return a.undecided < b.undecided;
    });
    return out;
}

double decoy_match_rate(const std::vector<PoolCandidate>& ranked, std::size_t true_index) {
    std::size_t decoys = 0;
    std::size_t hits = 0;
    for (const auto& c : ranked) {
        if (c.index == true_index) continue;
        ++decoys;
        hits += c.matched;
    }
    return decoys ? static_cast<double>(hits) / static_cast<double>(decoys) : 0.0;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string format_report(const CoalitionReport& r) {
    std::string out = "coalition: participants " + join(r.participants) + "; missing relators " + join(r.missing) +
                      "; family " + std::string(to_string(r.family)) + (r.complete ? "; complete" : "; partial") + "\n";
    for (std::size_t i = 0; i < r.words.size(); ++i) {
        const auto& w = r.words[i];
        out += "word " + std::to_string(i + 1) + ": " + std::string(to_string(w.verdict)) +
               " g'=" + std::string(to_string(w.in_partial)) + " work=" + std::to_string(w.stats.work) +
               " frontier=" + std::to_string(w.stats.peak_frontier) + "\n";
    }
    out += "summary: proved-identity=" + std::to_string(r.count(AttackVerdict::proved_identity)) +
           " proved-non-identity=" + std::to_string(r.count(AttackVerdict::proved_non_identity)) +
           " undecided=" + std::to_string(r.count(AttackVerdict::undecided)) + "\n";
    return out;
}

std::string format_report(const std::vector<PoolCandidate>& ranked) {
    std::string out;
    std::size_t matches = 0;
    for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
        const auto& c = ranked[rank];
        matches += c.matched;
        out += "rank " + std::to_string(rank + 1) + ": " + c.label + " " + (c.matched ? "match" : "no-match");
        if (c.error.empty())
            out += " offsets=" + join(c.offsets) + " undecided=" + std::to_string(c.undecided) + " bits=" + c.decoded;
        else
            out += " error=" + c.error;
        out += "\n";
    }
    out += "summary: candidates=" + std::to_string(ranked.size()) + " matches=" + std::to_string(matches) + "\n";
    return out;
}

}  // namespace wpss
