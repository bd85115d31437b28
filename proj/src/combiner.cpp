#include "wpss/combiner.hpp"

#include <algorithm>

#include "wpss/error.hpp"

namespace wpss {

std::size_t DecodeResult::undecided() const noexcept {
    return static_cast<std::size_t>(std::count_if(per_word.begin(), per_word.end(),
                                                  [](const Decision& d) { return d.verdict == Verdict::undecided; }));
}

std::string DecodeResult::render() const {
    std::string out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        out.push_back(i < per_word.size() && per_word[i].verdict == Verdict::undecided ? '?' : (bits[i] ? '1' : '0'));
    return out;
}

namespace {

DecodeResult decide_all(const WordProblemSolver& solver, const EncodedMessage& msg) {
    DecodeResult out;
    for (const auto& w : msg.words) {
        if (w.generator_bound() > solver.generator_count())
            throw ValidationError("message word uses generators outside the presentation");
        auto d = solver.decide(w);
        out.bits.push_back(d.verdict == Verdict::identity);
        out.per_word.push_back(std::move(d));
    }
    return out;
}

}  // namespace

DecodeResult decode_message(std::span<const Share> shares, const EncodedMessage& msg, const Budget& budget) {
    if (shares.empty()) throw ValidationError("no shares supplied");
    const auto rec = reconstruct(shares);
    if (rec.participants.size() < rec.params.t()) throw ThresholdError(rec.participants.size(), rec.params.t());
    if (!(rec.scheme_id == msg.scheme_id)) throw IntegrityError("message belongs to a different scheme than the shares");
    if (!rec.complete)
        throw IntegrityError("shares from " + std::to_string(rec.participants.size()) +
                             " participants do not cover all relators; the shares are inconsistent");

    SolverOptions opts;
    opts.budget = budget;
    opts.assume_consistent = true;  // dealer-issued shares
    const auto solver = make_solver(rec.presentation, opts);
    auto out = decide_all(*solver, msg);
    for (std::size_t i = 0; i < out.per_word.size(); ++i)
        if (out.per_word[i].verdict == Verdict::undecided)
            throw IntegrityError("word " + std::to_string(i + 1) + " could not be decided within the decode budget (" +
                                 out.per_word[i].note + "); the message was altered or the budget is below the "
                                 "dealer's");
    out.complete = true;
    out.participants = rec.participants;
    return out;
}

DecodeResult decode_single(const Share& share, const EncodedMessage& msg, const Budget& budget) {
    if (!(share.scheme_id == msg.scheme_id)) throw IntegrityError("message belongs to a different scheme than the share");
    const auto rec = reconstruct(std::span<const Share>(&share, 1));
    SolverOptions opts;
    opts.budget = budget;
    opts.assume_consistent = true;
    opts.allow_partial = true;
    const auto solver = make_solver(rec.presentation, opts);
    auto out = decide_all(*solver, msg);
    out.complete = rec.complete;
    out.participants = rec.participants;
    return out;
}

SignatureReport verify_signature(const Bits& bits, const Bits& signature) {
    SignatureReport r;
    r.degenerate = signature.empty();
    if (signature.size() <= bits.size()) {
        auto it = bits.begin();
        while (true) {
            it = std::search(it, bits.end(), signature.begin(), signature.end());
            if (it == bits.end() && !signature.empty()) break;
            r.offsets.push_back(static_cast<std::size_t>(it - bits.begin()));
            if (it == bits.end()) break;
            ++it;
        }
    }
    r.authentic = !r.offsets.empty();
    return r;
}

}  // namespace wpss
