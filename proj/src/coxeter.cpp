#include "wpss/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "wpss/error.hpp"

namespace wpss {

CoxeterMatrix::CoxeterMatrix(std::size_t rank) : rank_(rank), entries_(rank * rank, kInfinity) {
    if (rank == 0) throw ValidationError("Coxeter matrix needs at least one generator");
    if (rank > 0xffff) throw ValidationError("Coxeter rank above 65535 is not supported");
    for (std::size_t i = 0; i < rank; ++i) entries_[i * rank + i] = 1;
}

CoxeterMatrix CoxeterMatrix::type_a(std::size_t rank) {
    CoxeterMatrix mat(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) mat.set(i, j, j == i + 1 ? 3 : 2);
    return mat;
}

void CoxeterMatrix::set(std::size_t i, std::size_t j, std::uint32_t value) {
    if (i >= rank_ || j >= rank_) throw ValidationError("Coxeter matrix index out of range");
    if (i == j) throw ValidationError("diagonal Coxeter entries are fixed at 1");
    if (value != kInfinity && value < 2) throw ValidationError("off-diagonal Coxeter entries must be >= 2");
    entries_[i * rank_ + j] = value;
    entries_[j * rank_ + i] = value;
}

Word braid_relator(std::uint32_t i, std::uint32_t j, std::uint32_t m) {
    Word w;
    for (std::uint32_t r = 0; r < m; ++r) {
        w.push_back(pos(i));
        w.push_back(pos(j));
    }
    return w;
}

CoxeterMatrix validate_coxeter(const GroupPresentation& p) {
    if (p.family != Family::coxeter) throw ValidationError("presentation is not tagged as a Coxeter presentation");
    if (p.public_facts != PublicFacts::coxeter_involutions)
        throw ValidationError("Coxeter presentation must declare involutive generators in its public facts");
    CoxeterMatrix mat(p.generators.size());
    for (const auto& r : p.relators) {
        const auto& w = r.word;
        const std::string where = "relator " + std::to_string(r.index);
        if (std::any_of(w.begin(), w.end(), [](Letter l) { return l.sign < 0; }))
            throw ValidationError(where + ": inverse letters are not allowed (generators are involutions)");
        if (w.size() < 2 || w.size() % 2 != 0 || w[0].generator == w[1].generator)
            throw ValidationError(where + ": not of the form (s_i s_j)^m");
        for (std::size_t q = 2; q < w.size(); ++q)
            if (w[q].generator != w[q - 2].generator) throw ValidationError(where + ": not of the form (s_i s_j)^m");
        const auto m = static_cast<std::uint32_t>(w.size() / 2);
        if (m < 2) throw ValidationError(where + ": exponent m_ij must be at least 2");
        const auto i = w[0].generator;
        const auto j = w[1].generator;
        if (mat.is_finite(i, j)) throw ValidationError(where + ": duplicate relator for the same generator pair");
        mat.set(i, j, m);
    }
    return mat;
}

namespace {

using CoxWord = std::u16string;

class TitsRewriter {
public:
    TitsRewriter(const CoxeterMatrix& mat, std::uint64_t cap) : mat_(mat), cap_(cap) {}

    CoxeterDecision run(CoxWord word) {
        const std::size_t original = word.size();
        original_ = original;
        while (true) {
            word = reduce_local(word);
            if (word.size() > original) throw std::logic_error("Tits rewriting increased word length");
            if (word.empty()) return finish(Verdict::identity);
            if (++stats_.work > cap_) return finish(Verdict::undecided);
            switch (explore(word)) {
                case Outcome::shortened: continue;
                case Outcome::exhausted: return finish(Verdict::non_identity);
                case Outcome::budget: return finish(Verdict::undecided);
            }
        }
    }

private:
    enum class Outcome { shortened, exhausted, budget };

    std::uint32_t m(char16_t a, char16_t b) const { return mat_.at(a, b); }

    CoxeterDecision finish(Verdict v) const { return CoxeterDecision{v, stats_}; }

    // Stack rewriting with the two length-decreasing rules
    //   s s -> empty,  (x y x ...)_{m+1} -> (y x y ...)_{m-1}   (m = m_xy finite).
    // The stack never holds a redex, so only suffixes ending at the pushed
    // letter need checking.
    CoxWord reduce_local(const CoxWord& input) const {
        CoxWord stack;
        stack.reserve(input.size());
        std::vector<char16_t> pending(input.rbegin(), input.rend());
        while (!pending.empty()) {
            const char16_t c = pending.back();
            pending.pop_back();
            if (!stack.empty() && stack.back() == c) {
                stack.pop_back();
                continue;
            }
            if (!stack.empty()) {
                const char16_t b = stack.back();
                const auto mb = m(b, c);
                if (mb != CoxeterMatrix::kInfinity && stack.size() >= mb) {
                    std::size_t run = 1;
                    while (run < mb && stack[stack.size() - 1 - run] == (run % 2 ? c : b)) ++run;
                    if (run == mb) {
                        const char16_t x = stack[stack.size() - mb];
                        const char16_t y = x == b ? c : b;
                        stack.resize(stack.size() - mb);
                        for (std::size_t q = mb - 1; q-- > 0;) pending.push_back(q % 2 == 0 ? y : x);
                        continue;
                    }
                }
            }
            stack.push_back(c);
        }
        return stack;
    }

    // True if positions i, i+1 form a square or lie in an alternating run
    // longer than the pair's Coxeter entry.
    bool redex_at(const CoxWord& w, std::size_t i) const {
        if (w[i] == w[i + 1]) return true;
        const auto mij = m(w[i], w[i + 1]);
        if (mij == CoxeterMatrix::kInfinity) return false;
        std::size_t lo = i;
        while (lo > 0 && w[lo - 1] == w[lo + 1]) --lo;
        std::size_t hi = i + 1;
        while (hi + 1 < w.size() && w[hi + 1] == w[hi - 1]) ++hi;
        return hi - lo + 1 > mij;
    }

    // Breadth-first search over the braid class of an irreducible word until
    // some member admits a cheap shortening.
    Outcome explore(CoxWord& word) {
        std::unordered_set<CoxWord> seen{word};
        std::deque<CoxWord> queue{word};
        while (!queue.empty()) {
            const CoxWord u = std::move(queue.front());
            queue.pop_front();
            const std::size_t len = u.size();
            for (std::size_t p = 0; p + 1 < len; ++p) {
                const char16_t a = u[p];
                const char16_t b = u[p + 1];
                const auto mab = m(a, b);
                if (mab == CoxeterMatrix::kInfinity || p + mab > len) continue;
                bool alternating = true;
                for (std::size_t q = 2; q < mab && alternating; ++q) alternating = u[p + q] == u[p + q - 2];
                if (!alternating) continue;

                CoxWord v = u;
                for (std::size_t q = 0; q < mab; ++q) v[p + q] = q % 2 == 0 ? b : a;
                if (v.size() > original_) throw std::logic_error("braid move changed word length");
                if (!seen.insert(v).second) continue;
                if (++stats_.work > cap_) return Outcome::budget;
                const bool shortens = (p > 0 && redex_at(v, p - 1)) || (p + mab < len && redex_at(v, p + mab - 1));
                if (shortens) {
                    word = std::move(v);
                    return Outcome::shortened;
                }
                queue.push_back(std::move(v));
                stats_.peak_frontier = std::max<std::uint64_t>(stats_.peak_frontier, queue.size());
            }
        }
        return Outcome::exhausted;
    }

    const CoxeterMatrix& mat_;
    std::uint64_t cap_;
    std::size_t original_ = 0;
    EngineStats stats_;
};

}  // namespace

CoxeterDecision is_identity_tits(const CoxeterMatrix& mat, const Word& w, std::uint64_t explored_word_cap) {
    CoxWord word;
    word.reserve(w.size());
    for (const auto& l : w) {
        if (l.generator >= mat.rank()) throw ValidationError("word uses a generator outside the Coxeter matrix");
        word.push_back(static_cast<char16_t>(l.generator));
    }
    return TitsRewriter(mat, explored_word_cap).run(std::move(word));
}

bool perm_oracle_type_a(std::size_t rank, const Word& w) {
    std::vector<std::size_t> perm(rank + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& l : w) {
        if (l.generator >= rank) throw ValidationError("type-A oracle: generator out of range");
        std::swap(perm[l.generator], perm[l.generator + 1]);
    }
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

Decision CoxeterSolver::decide(const Word& w) const {
    const auto d = is_identity_tits(mat_, w, cap_);
    Decision out{d.verdict, d.stats, {}};
    if (d.verdict == Verdict::undecided)
        out.note = "explored-word budget of " + std::to_string(cap_) + " exhausted";
    return out;
}

}  // namespace wpss
